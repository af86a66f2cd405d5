#include "pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

namespace {

constexpr int kMaxPatternLength = 9;  // single-digit text syntax

[[noreturn]] void parse_fail(std::string_view text, size_t pos, const std::string& what) {
  throw std::invalid_argument("bad pattern '" + std::string(text) + "': " + what +
                              " at position " + std::to_string(pos + 1));
}

}  // namespace

VincularPattern::VincularPattern(Permutation sigma, std::vector<int> adjacencies)
    : sigma_(std::move(sigma)) {
  const int k = sigma_.size();
  if (k < 1) throw std::invalid_argument("VincularPattern: empty pattern");
  if (k > kMaxPatternLength)
    throw std::invalid_argument("VincularPattern: length capped at 9");
  for (int j : adjacencies) {
    if (j < 1 || j > k - 1)
      throw std::invalid_argument("VincularPattern: adjacency index outside [1, k-1]");
    mask_ |= 1u << j;
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  Word letters;
  std::vector<int> adj;
  bool prev_was_digit = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '1' && c <= '9') {
      if (prev_was_digit) adj.push_back(static_cast<int>(letters.size()));
      letters.push_back(c - '0');
      prev_was_digit = true;
    } else if (c == '-') {
      if (!prev_was_digit) parse_fail(text, i, "misplaced dash");
      prev_was_digit = false;
    } else {
      parse_fail(text, i, "unexpected character");
    }
  }
  if (letters.empty()) parse_fail(text, 0, "no letters");
  if (!prev_was_digit) parse_fail(text, text.size() - 1, "trailing dash");
  Permutation sigma;
  try {
    sigma = Permutation(letters);
  } catch (const std::invalid_argument&) {
    parse_fail(text, 0, "letters must form a permutation of 1..k");
  }
  return VincularPattern(std::move(sigma), std::move(adj));
}

std::string VincularPattern::str() const {
  std::string s;
  const int k = length();
  for (int j = 1; j <= k; ++j) {
    s += static_cast<char>('0' + sigma_.at(j));
    if (j < k && !adjacent_at(j)) s += '-';
  }
  return s;
}

std::vector<int> VincularPattern::adjacencies() const {
  std::vector<int> out;
  for (int j = 1; j < length(); ++j)
    if (adjacent_at(j)) out.push_back(j);
  return out;
}

bool VincularPattern::consecutive() const {
  for (int j = 1; j < length(); ++j)
    if (!adjacent_at(j)) return false;
  return true;
}

VincularPattern VincularPattern::symmetry(Symmetry kind) const {
  const int k = length();
  Permutation s = sigma_;
  std::vector<int> adj = adjacencies();
  if (kind == Symmetry::reverse || kind == Symmetry::reverse_complement) {
    s = s.reversed();
    for (int& j : adj) j = k - j;
  }
  if (kind == Symmetry::complement || kind == Symmetry::reverse_complement) {
    s = s.complemented();
  }
  return VincularPattern(std::move(s), std::move(adj));
}

BarredPattern::BarredPattern(Permutation underlying, int barred_position)
    : underlying_(std::move(underlying)), barred_position_(barred_position) {
  const int len = underlying_.size();
  if (len > kMaxPatternLength)
    throw std::invalid_argument("BarredPattern: length capped at 9");
  if (barred_position_ < 1 || barred_position_ > len)
    throw std::invalid_argument("BarredPattern: barred position out of range");
  if (len - 1 < 1)
    throw std::invalid_argument("BarredPattern: unbarred part must be nonempty");
}

BarredPattern BarredPattern::parse(std::string_view text) {
  Word letters;
  int barred = 0;
  bool pending_bar = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '1' && c <= '9') {
      letters.push_back(c - '0');
      if (pending_bar) {
        if (barred != 0) parse_fail(text, i, "more than one barred letter");
        barred = static_cast<int>(letters.size());
        pending_bar = false;
      }
    } else if (c == '~') {
      if (pending_bar) parse_fail(text, i, "doubled bar");
      pending_bar = true;
    } else {
      parse_fail(text, i, "unexpected character");
    }
  }
  if (pending_bar) parse_fail(text, text.size() - 1, "bar with no letter");
  if (barred == 0) parse_fail(text, 0, "no barred letter");
  Permutation sigma;
  try {
    sigma = Permutation(letters);
  } catch (const std::invalid_argument&) {
    parse_fail(text, 0, "letters must form a permutation of 1..k");
  }
  return BarredPattern(std::move(sigma), barred);
}

std::string BarredPattern::str() const {
  std::string s;
  for (int j = 1; j <= underlying_.size(); ++j) {
    if (j == barred_position_) s += '~';
    s += static_cast<char>('0' + underlying_.at(j));
  }
  return s;
}

Permutation BarredPattern::unbarred() const {
  Word w;
  for (int j = 1; j <= underlying_.size(); ++j)
    if (j != barred_position_) w.push_back(underlying_.at(j));
  return Permutation(reduce(w));
}

AnyPattern parse_pattern(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("bad pattern '': empty at position 1");
  if (text.find('~') != std::string_view::npos) return BarredPattern::parse(text);
  return VincularPattern::parse(text);
}

std::string pattern_str(const AnyPattern& p) {
  return std::visit([](const auto& v) { return v.str(); }, p);
}

}  // namespace vinc
