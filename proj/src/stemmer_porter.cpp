#include "partyline/stemmer.hpp"

#include <array>

namespace partyline::textprep {

namespace {

// Working buffer for the 1980 algorithm. All predicates follow the paper's
// consonant/vowel classification: y is a consonant at position 0 or after a
// vowel, otherwise a vowel.
struct PorterWord {
  std::string w;

  bool consonant(size_t i) const {
    switch (w[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !consonant(i - 1);
      default:
        return true;
    }
  }

  // Measure of the prefix w[0..len): m in the [C](VC){m}[V] decomposition.
  int measure(size_t len) const {
    int m = 0;
    for (size_t i = 0; i + 1 < len; ++i)
      if (!consonant(i) && consonant(i + 1)) ++m;
    return m;
  }

  bool has_vowel(size_t len) const {
    for (size_t i = 0; i < len; ++i)
      if (!consonant(i)) return true;
    return false;
  }

  bool ends_double_consonant(size_t len) const {
    return len >= 2 && w[len - 1] == w[len - 2] && consonant(len - 1);
  }

  // *o: prefix ends consonant-vowel-consonant where the final consonant is
  // not w, x or y.
  bool ends_cvc(size_t len) const {
    if (len < 3) return false;
    char c = w[len - 1];
    return consonant(len - 1) && !consonant(len - 2) && consonant(len - 3) &&
           c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
  }

  size_t stem_len(std::string_view suffix) const {
    return w.size() - suffix.size();
  }

  void set_suffix(std::string_view suffix, std::string_view repl) {
    w.replace(w.size() - suffix.size(), suffix.size(), repl);
  }
};

struct Rule {
  std::string_view suffix;
  std::string_view repl;
};

// Applies the first matching rule whose stem measure exceeds min_measure.
// Matching a suffix consumes the step even when the condition fails.
bool apply_rules(PorterWord& pw, const Rule* rules, size_t n, int min_measure) {
  for (size_t i = 0; i < n; ++i) {
    if (pw.ends(rules[i].suffix)) {
      if (pw.measure(pw.stem_len(rules[i].suffix)) > min_measure)
        pw.set_suffix(rules[i].suffix, rules[i].repl);
      return true;
    }
  }
  return false;
}

void step_1a(PorterWord& pw) {
  if (pw.ends("sses")) {
    pw.w.resize(pw.w.size() - 2);
  } else if (pw.ends("ies")) {
    pw.set_suffix("ies", "i");
  } else if (pw.ends("ss")) {
    // keep
  } else if (pw.ends("s")) {
    pw.w.pop_back();
  }
}

void step_1b(PorterWord& pw) {
  if (pw.ends("eed")) {
    if (pw.measure(pw.stem_len("eed")) > 0) pw.w.pop_back();
    return;
  }
  bool stripped = false;
  if (pw.ends("ed") && pw.has_vowel(pw.stem_len("ed"))) {
    pw.w.resize(pw.w.size() - 2);
    stripped = true;
  } else if (pw.ends("ing") && pw.has_vowel(pw.stem_len("ing"))) {
    pw.w.resize(pw.w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (pw.ends("at") || pw.ends("bl") || pw.ends("iz")) {
    pw.w.push_back('e');
  } else if (pw.ends_double_consonant(pw.w.size())) {
    char c = pw.w.back();
    if (c != 'l' && c != 's' && c != 'z') pw.w.pop_back();
  } else if (pw.measure(pw.w.size()) == 1 && pw.ends_cvc(pw.w.size())) {
    pw.w.push_back('e');
  }
}

void step_1c(PorterWord& pw) {
  if (pw.ends("y") && pw.has_vowel(pw.w.size() - 1)) pw.w.back() = 'i';
}

constexpr std::array<Rule, 21> kStep2Rules = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
    {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
    {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
    {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
    {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"},
}};

constexpr std::array<Rule, 7> kStep3Rules = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<Rule, 18> kStep4Rules = {{
    {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},
    {"able", ""},  {"ible", ""}, {"ant", ""},  {"ement", ""},
    {"ment", ""},  {"ent", ""},  {"ou", ""},   {"ism", ""}, {"ate", ""},
    {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},
}};

void step_4(PorterWord& pw) {
  // "ion" only counts with an s or t left on the stem; checked here because
  // the generic rule table cannot express it.
  for (const Rule& r : kStep4Rules) {
    if (pw.ends(r.suffix)) {
      size_t stem = pw.stem_len(r.suffix);
      // "ement" wins over "ment"/"ent" by preceding them in the table.
      if (pw.measure(stem) > 1) pw.set_suffix(r.suffix, r.repl);
      return;
    }
    if (r.suffix == "ent" && pw.ends("ion")) {
      size_t stem = pw.stem_len("ion");
      if (stem > 0 && (pw.w[stem - 1] == 's' || pw.w[stem - 1] == 't') &&
          pw.measure(stem) > 1)
        pw.w.resize(stem);
      if (pw.ends("ion")) return;  // matched but condition failed
      return;
    }
  }
}

void step_5a(PorterWord& pw) {
  if (!pw.ends("e")) return;
  size_t stem = pw.w.size() - 1;
  int m = pw.measure(stem);
  if (m > 1 || (m == 1 && !pw.ends_cvc(stem))) pw.w.pop_back();
}

void step_5b(PorterWord& pw) {
  if (pw.w.size() >= 2 && pw.w.back() == 'l' &&
      pw.ends_double_consonant(pw.w.size()) && pw.measure(pw.w.size()) > 1)
    pw.w.pop_back();
}

}  // namespace

std::string porter_classic(std::string_view word) {
  PorterWord pw{std::string(word)};
  if (pw.w.empty()) return pw.w;
  step_1a(pw);
  step_1b(pw);
  step_1c(pw);
  apply_rules(pw, kStep2Rules.data(), kStep2Rules.size(), 0);
  apply_rules(pw, kStep3Rules.data(), kStep3Rules.size(), 0);
  step_4(pw);
  step_5a(pw);
  step_5b(pw);
  return pw.w;
}

}  // namespace partyline::textprep
