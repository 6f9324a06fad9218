#pragma once

#include <string>
#include <string_view>

namespace partyline::textprep {

enum class StemVariant { PorterClassic, Porter2 };

// Suffix-stripping stemmers for lowercase a-z words.
//
// PorterClassic is the 1980 five-step algorithm as maintained by its author
// (includes the author's later rule corrections, e.g. "bli"->"ble" and the
// added "logi"->"log" in step 2). Porter2 is the Snowball English stemmer.
// Both are deterministic and total: any a-z input yields a stem.
std::string porter_classic(std::string_view word);
std::string porter2(std::string_view word);

inline std::string stem(std::string_view word, StemVariant variant) {
  return variant == StemVariant::PorterClassic ? porter_classic(word)
                                               : porter2(word);
}

}  // namespace partyline::textprep
