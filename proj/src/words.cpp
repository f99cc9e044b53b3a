#include "chenlie/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "chenlie/errors.hpp"

namespace chenlie {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw InvalidInputError("Word: zero letter");
    push_reduced(letters_, l);
  }
}

Word Word::generator(int i, int sign) {
  if (i < 1) throw InvalidInputError("Word: generator index must be >= 1");
  Word w;
  w.letters_.push_back(sign >= 0 ? i : -i);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(long e) const {
  Word base = e >= 0 ? *this : inverse();
  long k = std::labs(e);
  Word out;
  for (long t = 0; t < k; ++t) out = out * base;
  return out;
}

long Word::exponent_sum(int i) const {
  long s = 0;
  for (int l : letters_) {
    if (l == i) ++s;
    if (l == -i) --s;
  }
  return s;
}

int Word::max_generator() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) os << ' ';
    os << 'x' << std::abs(letters_[t]);
    if (letters_[t] < 0) os << "^-1";
  }
  return os.str();
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (int l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_;
}

bool operator<(const Word& a, const Word& b) {
  return a.letters_ < b.letters_;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

bool is_commutator_word(const Word& w) {
  for (int i = 1; i <= w.max_generator(); ++i)
    if (w.exponent_sum(i) != 0) return false;
  return true;
}

/* ---------------- word grammar ---------------- */

namespace {

struct WordParser {
  const std::string& s;
  int n;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer", start);
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }

  // atom := 'xK' | '[' expr ',' expr ']' , followed by optional '^E'
  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    Word base;
    if (s[pos] == 'x') {
      std::size_t start = pos;
      ++pos;
      long k = parse_int();
      if (k < 1) throw ParseError("generator index must be >= 1", start);
      if (k > n)
        throw ParseError("generator x" + std::to_string(k) +
                             " exceeds generator count " + std::to_string(n),
                         start);
      base = Word::generator(static_cast<int>(k));
    } else if (s[pos] == '[') {
      ++pos;
      Word a = parse_expr();
      skip_ws();
      if (pos >= s.size() || s[pos] != ',')
        throw ParseError("expected ',' in commutator", pos);
      ++pos;
      Word b = parse_expr();
      skip_ws();
      if (pos >= s.size() || s[pos] != ']')
        throw ParseError("expected ']' to close commutator", pos);
      ++pos;
      base = commutator(a, b);
    } else {
      throw ParseError(std::string("unexpected character '") + s[pos] + "'",
                       pos);
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      std::size_t start = pos;
      ++pos;
      long e = parse_int();
      if (e == 0) throw ParseError("exponent must be nonzero", start);
      base = base.pow(e);
    }
    return base;
  }

  // expr := atom*  (stops at ',' or ']')
  Word parse_expr() {
    Word w;
    for (;;) {
      skip_ws();
      if (pos >= s.size() || s[pos] == ',' || s[pos] == ']') return w;
      w = w * parse_atom();
    }
  }
};

}  // namespace

Word parse_word(const std::string& text, int n) {
  WordParser p{text, n};
  Word w = p.parse_expr();
  if (!p.at_end())
    throw ParseError(std::string("unexpected character '") + text[p.pos] + "'",
                     p.pos);
  return w;
}

/* ---------------- group ring ---------------- */

GroupRingElement GroupRingElement::of(Word w, Int c) {
  GroupRingElement e;
  if (c != 0) e.terms_.emplace(std::move(w), std::move(c));
  return e;
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (auto& t : terms_) s += t.second;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (auto& t : o.terms_) {
    auto it = terms_.find(t.first);
    if (it == terms_.end()) {
      terms_.emplace(t.first, t.second);
    } else {
      it->second += t.second;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (auto& t : o.terms_) {
    auto it = terms_.find(t.first);
    if (it == terms_.end()) {
      terms_.emplace(t.first, -t.second);
    } else {
      it->second -= t.second;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
  a += b;
  return a;
}

GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
  a -= b;
  return a;
}

GroupRingElement operator*(const GroupRingElement& a,
                           const GroupRingElement& b) {
  GroupRingElement out;
  for (auto& s : a.terms_)
    for (auto& t : b.terms_)
      out += GroupRingElement::of(s.first * t.first, s.second * t.second);
  return out;
}

GroupRingElement GroupRingElement::operator*(const Int& c) const {
  GroupRingElement out;
  if (c == 0) return out;
  for (auto& t : terms_) out.terms_.emplace(t.first, t.second * c);
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.terms_ == b.terms_;
}

GroupRingElement fox_derivative(const Word& w, int i) {
  if (i < 1) throw InvalidInputError("fox_derivative: index must be >= 1");
  GroupRingElement out;
  std::vector<int> prefix;
  for (int l : w.letters()) {
    if (l == i) {
      out += GroupRingElement::of(Word(prefix));
    } else if (l == -i) {
      std::vector<int> pw = prefix;
      pw.push_back(l);
      out -= GroupRingElement::of(Word(pw));
    }
    push_reduced(prefix, l);
  }
  return out;
}

GroupRingElement fox_derivative(const GroupRingElement& e, int i) {
  GroupRingElement out;
  for (auto& t : e.terms()) out += fox_derivative(t.first, i) * t.second;
  return out;
}

/* ---------------- presentations and epsilon data ---------------- */

bool GroupPresentation::is_commutator_relators() const {
  for (auto& r : relators)
    if (!is_commutator_word(r)) return false;
  return true;
}

void EpsilonMatrix::set_upper(std::size_t k, int i, int j, Int v) {
  if (!(1 <= i && i < j && j <= n_))
    throw InvalidInputError("EpsilonMatrix: need 1 <= i < j <= n");
  if (v != 0) data_[k][{i, j}] = std::move(v);
}

Int EpsilonMatrix::eps(std::size_t k, int i, int j) const {
  if (i == j) return 0;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = data_[k].find({i, j});
  if (it == data_[k].end()) return 0;
  return flip ? -it->second : it->second;
}

namespace {

std::string abelianized_image(const Word& w, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    long e = w.exponent_sum(i);
    if (e == 0) continue;
    if (!first) os << ' ';
    os << 'x' << i << '^' << e;
    first = false;
  }
  return first ? "1" : os.str();
}

}  // namespace

EpsilonMatrix epsilon_matrix(const GroupPresentation& p) {
  EpsilonMatrix m(p.n, p.relators.size());
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const Word& r = p.relators[k];
    if (r.max_generator() > p.n)
      throw InvalidInputError("relator uses a generator beyond x" +
                              std::to_string(p.n));
    if (!is_commutator_word(r))
      throw InvalidInputError(
          "relator " + std::to_string(k + 1) +
          " is not a commutator word; abelianized image: " +
          abelianized_image(r, p.n));
    for (int j = 1; j <= p.n; ++j) {
      const GroupRingElement dj = fox_derivative(r, j);
      for (int i = 1; i < j; ++i) {
        // augmentation of d_i applied to dj: per term, coefficient times
        // the exponent sum of x_i
        Int v = 0;
        for (auto& t : dj.terms()) v += t.second * t.first.exponent_sum(i);
        m.set_upper(k, i, j, std::move(v));
      }
    }
  }
  return m;
}

LinearFormMatrix linearized_alexander_matrix(const GroupPresentation& p) {
  const EpsilonMatrix eps = epsilon_matrix(p);
  LinearFormMatrix out;
  out.m = static_cast<long>(p.relators.size());
  out.n = p.n;
  out.coeff.assign(out.m, std::vector<std::vector<Int>>(
                              p.n, std::vector<Int>(p.n, Int(0))));
  for (long k = 0; k < out.m; ++k)
    for (int j = 1; j <= p.n; ++j)
      for (int i = 1; i <= p.n; ++i)
        out.coeff[k][j - 1][i - 1] = eps.eps(k, i, j);
  return out;
}

/* ---------------- Magnus truncation ---------------- */

LaurentElement abelianize(const GroupRingElement& e, int n) {
  LaurentElement out;
  for (auto& t : e.terms()) {
    ExponentVector ex(n, 0);
    for (int l : t.first.letters()) {
      int g = std::abs(l);
      if (g > n)
        throw InvalidInputError("abelianize: generator beyond x" +
                                std::to_string(n));
      ex[g - 1] += l > 0 ? 1 : -1;
    }
    auto it = out.find(ex);
    if (it == out.end()) {
      out.emplace(std::move(ex), t.second);
    } else {
      it->second += t.second;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

TruncatedPoly magnus_truncate(const LaurentElement& e, int q, int n) {
  if (q < 0) throw InvalidInputError("magnus_truncate: q must be >= 0");
  TruncatedPoly out;
  auto add = [&](std::vector<int> mono, Int c) {
    if (c == 0) return;
    auto it = out.find(mono);
    if (it == out.end()) {
      out.emplace(std::move(mono), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (auto& t : e) {
    // expand prod_i (1+s_i)^{a_i} up to total degree q
    std::vector<std::pair<std::vector<int>, Int>> acc = {
        {std::vector<int>(n, 0), t.second}};
    for (int i = 0; i < n; ++i) {
      const long a = t.first[i];
      if (a == 0) continue;
      std::vector<std::pair<std::vector<int>, Int>> next;
      for (auto& term : acc) {
        int deg = 0;
        for (int d : term.first) deg += d;
        for (int k = 0; deg + k <= q; ++k) {
          Int c = term.second * binomial_any(a, k);
          if (c == 0) continue;
          auto mono = term.first;
          mono[i] += k;
          next.emplace_back(std::move(mono), std::move(c));
        }
      }
      acc = std::move(next);
    }
    for (auto& term : acc) add(std::move(term.first), std::move(term.second));
  }
  return out;
}

std::vector<Int> degree_one_part(const TruncatedPoly& p, int n) {
  std::vector<Int> out(n, Int(0));
  for (auto& t : p) {
    int deg = 0, var = -1;
    for (int i = 0; i < n; ++i) {
      deg += t.first[i];
      if (t.first[i] > 0) var = i;
    }
    if (deg == 1) out[var] = t.second;
  }
  return out;
}

}  // namespace chenlie
