#include "towercalc/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace towercalc {

namespace {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return std::string(s.substr(begin, end - begin));
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

Int parse_int(const std::string& token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
  if (i == token.size()) throw ParseError("not an integer: '" + token + "'");
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw ParseError("not an integer: '" + token + "'");
  return Int(token);
}

std::size_t parse_size(const std::string& token) {
  if (token.empty()) throw ParseError("missing number");
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("not a nonnegative number: '" + token + "'");
  return static_cast<std::size_t>(std::stoull(token));
}

// The cyclic summands of g with 0 standing for an infinite factor.
std::vector<Int> summand_orders(const FgAbGroup& g) {
  std::vector<Int> s(g.rank(), 0);
  for (const Int& f : g.invariant_factors()) s.push_back(f);
  return s;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  const auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  const auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  // row a -= q * row b
  const auto row_axpy = [&](std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) d.at(a, j) -= q * d.at(b, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(a, j) -= q * u.at(b, j);
  };
  // col a -= q * col b
  const auto col_axpy = [&](std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) d.at(i, a) -= q * d.at(i, b);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, a) -= q * v.at(i, b);
  };
  const auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(a, j) = -u.at(a, j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix as pivot.
      std::size_t pi = t;
      std::size_t pj = t;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (!found || abs_int(d.at(i, j)) < abs_int(d.at(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = steps;  // the rest of the matrix is zero
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_axpy(i, t, d.at(i, t) / d.at(t, t));
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        col_axpy(j, t, d.at(t, j) / d.at(t, t));
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Fold any non-divisible remaining entry into the pivot's row so the
      // next pass shrinks the pivot to a common divisor.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_axpy(t, i, Int(-1));
            divisible = false;
          }
      if (divisible) break;
    }
    if (t == steps) break;
  }

  for (std::size_t i = 0; i < steps; ++i)
    if (d.at(i, i) < 0) negate_row(i);
  return r;
}

FgAbGroup FgAbGroup::free(std::size_t rank) {
  FgAbGroup g;
  g.rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  return from_summands(0, {n});
}

FgAbGroup FgAbGroup::from_summands(std::size_t rank, std::vector<Int> orders) {
  FgAbGroup g;
  g.rank_ = rank;
  std::vector<Int> torsion;
  for (Int& o : orders) {
    if (o < 0) o = -o;
    if (o == 0) {
      ++g.rank_;
      continue;
    }
    if (o == 1) continue;
    torsion.push_back(std::move(o));
  }
  if (torsion.size() > 1) {
    IntMatrix diag(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) diag.at(i, i) = torsion[i];
    const SnfResult snf = smith_normal_form(diag);
    torsion.clear();
    for (std::size_t i = 0; i < diag.rows(); ++i)
      if (snf.d.at(i, i) > 1) torsion.push_back(snf.d.at(i, i));
  }
  g.factors_ = std::move(torsion);
  return g;
}

std::string FgAbGroup::str(bool unicode) const {
  const char* z = unicode ? "ℤ" : "Z";
  const char* sep = unicode ? " × " : " x ";
  std::ostringstream out;
  bool first = true;
  const auto push = [&](const std::string& token) {
    if (!first) out << sep;
    out << token;
    first = false;
  };
  if (rank_ == 1) push(z);
  if (rank_ >= 2) push(z + ("^" + std::to_string(rank_)));
  for (const Int& f : factors_) {
    std::ostringstream tok;
    tok << z << "/" << f;
    push(tok.str());
  }
  if (first) return "0";
  return out.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(),
                b.invariant_factors().end());
  return FgAbGroup::from_summands(a.rank() + b.rank(), std::move(orders));
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  std::size_t rank = 0;
  std::vector<Int> orders;
  for (const Int& x : summand_orders(a))
    for (const Int& y : summand_orders(b)) {
      if (x == 0 && y == 0)
        ++rank;
      else if (x == 0)
        orders.push_back(y);
      else if (y == 0)
        orders.push_back(x);
      else
        orders.push_back(gcd(x, y));
    }
  return FgAbGroup::from_summands(rank, std::move(orders));
}

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
  std::size_t rank = 0;
  std::vector<Int> orders;
  for (const Int& x : summand_orders(a))
    for (const Int& y : summand_orders(b)) {
      if (x == 0 && y == 0)
        ++rank;
      else if (x == 0)
        orders.push_back(y);
      else if (y != 0)
        orders.push_back(gcd(x, y));
    }
  return FgAbGroup::from_summands(rank, std::move(orders));
}

FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders;
  for (const Int& x : summand_orders(a)) {
    if (x == 0) continue;
    for (const Int& y : summand_orders(b))
      orders.push_back(y == 0 ? x : gcd(x, y));
  }
  return FgAbGroup::from_summands(0, std::move(orders));
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders;
  for (const Int& x : summand_orders(a)) {
    if (x == 0) continue;
    for (const Int& y : summand_orders(b)) {
      if (y == 0) continue;
      orders.push_back(gcd(x, y));
    }
  }
  return FgAbGroup::from_summands(0, std::move(orders));
}

FgAbGroup cokernel(const IntMatrix& m) {
  const SnfResult snf = smith_normal_form(m);
  const std::size_t k = std::min(m.rows(), m.cols());
  std::size_t image_rank = 0;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.d.at(i, i) == 0) continue;
    ++image_rank;
    orders.push_back(snf.d.at(i, i));
  }
  return FgAbGroup::from_summands(m.rows() - image_rank, std::move(orders));
}

GroupElement::GroupElement(FgAbGroup parent, std::vector<Int> coords)
    : parent_(std::move(parent)) {
  if (coords.size() != parent_.coord_count())
    throw std::invalid_argument("coordinate count mismatch");
  free_.assign(coords.begin(),
               coords.begin() + static_cast<std::ptrdiff_t>(parent_.rank()));
  const auto& factors = parent_.invariant_factors();
  torsion_.resize(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Int r = coords[parent_.rank() + i] % factors[i];
    if (r < 0) r += factors[i];
    torsion_[i] = std::move(r);
  }
}

GroupElement GroupElement::zero(const FgAbGroup& parent) {
  return GroupElement(parent, std::vector<Int>(parent.coord_count()));
}

std::vector<Int> GroupElement::coords() const {
  std::vector<Int> out = free_;
  out.insert(out.end(), torsion_.begin(), torsion_.end());
  return out;
}

bool GroupElement::is_zero() const {
  for (const Int& c : free_)
    if (c != 0) return false;
  for (const Int& c : torsion_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  if (parent_ != rhs.parent_)
    throw std::invalid_argument("incompatible groups");
  std::vector<Int> sum = coords();
  const std::vector<Int> other = rhs.coords();
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other[i];
  return GroupElement(parent_, std::move(sum));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> neg = coords();
  for (Int& c : neg) c = -c;
  return GroupElement(parent_, std::move(neg));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  return *this + (-rhs);
}

std::string GroupElement::str() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const Int& c : coords()) {
    if (!first) out << ", ";
    out << c;
    first = false;
  }
  out << ")";
  return out.str();
}

FgAbGroup parse_group(std::string_view text) {
  std::string s(text);
  replace_all(s, "ℤ", "Z");
  replace_all(s, "×", "x");
  if (trim(s).empty()) throw ParseError("empty group expression");
  std::size_t rank = 0;
  std::vector<Int> orders;
  for (const std::string& raw : split(s, 'x')) {
    const std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty factor in group expression");
    if (tok == "0") continue;
    if (tok == "Z") {
      ++rank;
      continue;
    }
    if (tok.rfind("Z^", 0) == 0) {
      rank += parse_size(tok.substr(2));
      continue;
    }
    if (tok.rfind("Z/", 0) == 0) {
      const std::size_t n = parse_size(tok.substr(2));
      if (n == 0) throw ParseError("Z/0 is not a group");
      orders.emplace_back(n);
      continue;
    }
    throw ParseError("unrecognized group factor '" + tok + "'");
  }
  return FgAbGroup::from_summands(rank, std::move(orders));
}

GroupElement parse_element(const FgAbGroup& parent, std::string_view text) {
  const std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("element must be parenthesized: '" + s + "'");
  const std::string inner = trim(s.substr(1, s.size() - 2));
  std::vector<std::string> segments;
  if (!inner.empty())
    for (const std::string& seg : split(inner, ',')) segments.push_back(seg);
  if (segments.size() != parent.coord_count()) {
    std::ostringstream msg;
    msg << "element shape mismatch: got " << segments.size()
        << " coordinates, group " << parent.str() << " takes "
        << parent.coord_count();
    throw ParseError(msg.str());
  }
  std::vector<Int> coords;
  coords.reserve(segments.size());
  for (const std::string& seg : segments) coords.push_back(parse_int(trim(seg)));
  return GroupElement(parent, std::move(coords));
}

IntMatrix parse_matrix(std::string_view text) {
  std::string s(text);
  replace_all(s, ",", " ");
  if (trim(s).empty()) return {};
  std::vector<std::vector<Int>> rows;
  for (const std::string& row_text : split(s, ';')) {
    std::vector<Int> row;
    std::istringstream in(row_text);
    std::string tok;
    while (in >> tok) row.push_back(parse_int(tok));
    rows.push_back(std::move(row));
  }
  const std::size_t width = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != width) throw ParseError("ragged matrix rows");
  IntMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

std::string matrix_str(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << m.at(i, j);
    }
  }
  return out.str();
}

}  // namespace towercalc
