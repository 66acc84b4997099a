#include "isochron/operators.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

int parse_int(std::string_view s, std::string_view context) {
  std::size_t k = 0;
  bool negative = false;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) negative = s[k++] == '-';
  if (k == s.size()) throw InputError("invalid letter '" + std::string(context) + "'");
  long v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])) || v > 1'000'000) {
      throw InputError("invalid letter '" + std::string(context) + "'");
    }
    v = v * 10 + (s[k] - '0');
  }
  return static_cast<int>(negative ? -v : v);
}

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return s;
}

}  // namespace

std::string Letter::to_string() const { return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; }

Letter Letter::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') {
    throw InputError("invalid letter '" + std::string(text) + "'");
  }
  const std::string_view body(s.data() + 1, s.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw InputError("invalid letter '" + std::string(text) + "'");
  return {parse_int(body.substr(0, comma), text), parse_int(body.substr(comma + 1), text)};
}

Word Word::concat(const Word& o) const {
  Word r = *this;
  r.letters_.insert(r.letters_.end(), o.letters_.begin(), o.letters_.end());
  return r;
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::string Word::to_string() const {
  if (letters_.empty()) return "\xE2\x88\x85";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) out += kMiddleDot;
    out += letters_[k].to_string();
  }
  return out;
}

Word Word::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty() || s == "\xE2\x88\x85") return {};
  Word w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw InputError("invalid word '" + std::string(text) + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw InputError("invalid word '" + std::string(text) + "'");
    w.push_back(Letter::parse(std::string_view(s).substr(pos, close - pos + 1)));
    pos = close + 1;
    if (pos == s.size()) break;
    if (s.compare(pos, kMiddleDot.size(), kMiddleDot) == 0) {
      pos += kMiddleDot.size();
    } else if (s[pos] == '*' || s[pos] == '.') {
      ++pos;
    } else {
      throw InputError("invalid word separator in '" + std::string(text) + "'");
    }
    if (pos == s.size()) throw InputError("trailing separator in word '" + std::string(text) + "'");
  }
  return w;
}

Derivation::Derivation(BiPoly dx, BiPoly dy, std::optional<Letter> letter)
    : dx_(std::move(dx)), dy_(std::move(dy)), letter_(letter) {
  if (is_zero()) letter_.reset();
}

Derivation Derivation::homogeneous(Letter letter, const GaussianRational& cx, const GaussianRational& cy) {
  if (letter.n1 < -1 || letter.n2 < -1 || (letter.n1 == -1 && letter.n2 == -1)) {
    throw InputError("invalid letter " + letter.to_string());
  }
  // A negative multidegree forces the zero coefficient.
  if (letter.n2 == -1 && !cx.is_zero()) throw InputError("dx must vanish for letter " + letter.to_string());
  if (letter.n1 == -1 && !cy.is_zero()) throw InputError("dy must vanish for letter " + letter.to_string());
  BiPoly dx = cx.is_zero() ? BiPoly{} : BiPoly::monomial(letter.n1 + 1, letter.n2, cx);
  BiPoly dy = cy.is_zero() ? BiPoly{} : BiPoly::monomial(letter.n1, letter.n2 + 1, cy);
  return {std::move(dx), std::move(dy), letter};
}

BiPoly Derivation::apply(const BiPoly& p) const { return dx_ * partial(p, Var::x) + dy_ * partial(p, Var::y); }

Derivation Derivation::operator-() const { return {-dx_, -dy_, letter_}; }

Derivation& Derivation::operator+=(const Derivation& o) {
  if (letter_ != o.letter_) letter_ = is_zero() ? o.letter_ : (o.is_zero() ? letter_ : std::nullopt);
  dx_ += o.dx_;
  dy_ += o.dy_;
  if (is_zero()) letter_.reset();
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) { return *this += -o; }

Derivation operator*(const GaussianRational& c, const Derivation& d) { return {d.dx_ * c, d.dy_ * c, d.letter_}; }

std::string Derivation::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "[" << dx_.to_string() << "] dx + [" << dy_.to_string() << "] dy";
  return os.str();
}

Derivation lie_bracket(const Derivation& d1, const Derivation& d2) {
  std::optional<Letter> letter;
  if (d1.letter() && d2.letter()) letter = *d1.letter() + *d2.letter();
  return {d1.apply(d2.dx()) - d2.apply(d1.dx()), d1.apply(d2.dy()) - d2.apply(d1.dy()), letter};
}

BiPoly bracket_oracle(const Derivation& d1, const Derivation& d2, const BiPoly& p) {
  return d1.apply(d2.apply(p)) - d2.apply(d1.apply(p));
}

Derivation nested_bracket(const Word& w, const OperatorMap& ops) {
  if (w.empty()) throw InputError("nested bracket of the empty word");
  auto lookup = [&](const Letter& l) -> const Derivation& {
    auto it = ops.find(l);
    if (it == ops.end()) throw InputError("letter " + l.to_string() + " is not in the alphabet");
    return it->second;
  };
  Derivation acc = lookup(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) acc = lie_bracket(lookup(w[k]), acc);
  return acc;
}

}  // namespace isochron
