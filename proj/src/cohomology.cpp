#include "towercalc/cohomology.hpp"

#include <stdexcept>

#include "towercalc/errors.hpp"

namespace towercalc {

std::string_view class_name_str(ClassName n) {
  switch (n) {
    case ClassName::w1:
      return "w1";
    case ClassName::w2:
      return "w2";
    case ClassName::sqrt_p1:
      return "sqrt_p1";
    case ClassName::half_p1:
      return "half_p1";
    case ClassName::p1:
      return "p1";
    case ClassName::c1:
      return "c1";
    case ClassName::c2:
      return "c2";
    case ClassName::p1H:
      return "p1H";
    case ClassName::e:
      return "e";
  }
  throw std::logic_error("unhandled class name");
}

std::string ClassRef::label() const {
  std::string s(class_name_str(name));
  if (sub > 0) s += "#" + std::to_string(sub);
  return s;
}

std::string ClassRef::id() const {
  std::string s(class_name_str(name));
  if (factor > 0) s += "." + std::to_string(factor);
  if (sub > 0) s += "." + std::to_string(sub);
  return s;
}

ClassRef make_class(ClassName name, int factor, int sub) {
  int degree = 0;
  FgAbGroup coeff;
  switch (name) {
    case ClassName::w1:
      degree = 1;
      coeff = FgAbGroup::cyclic(2);
      break;
    case ClassName::w2:
      degree = 2;
      coeff = FgAbGroup::cyclic(2);
      break;
    case ClassName::sqrt_p1:
      degree = 2;
      coeff = FgAbGroup::free(1);
      break;
    case ClassName::half_p1:
    case ClassName::p1:
    case ClassName::c2:
    case ClassName::p1H:
      degree = 4;
      coeff = FgAbGroup::free(1);
      break;
    case ClassName::c1:
      degree = 2;
      coeff = FgAbGroup::free(1);
      break;
    case ClassName::e:
      throw std::invalid_argument(
          "the Euler class degree depends on the rank; use make_euler_class");
  }
  return ClassRef{name, degree, coeff, factor, sub};
}

ClassRef make_euler_class(int n, int factor) {
  if (n < 1) throw std::invalid_argument("Euler class needs a positive rank");
  return ClassRef{ClassName::e, n, FgAbGroup::free(1), factor, 0};
}

const FgAbGroup& GradedGroupList::at(int k) const {
  if (k < 0 || k > max_degree())
    throw OutsideTable("homology degree " + std::to_string(k) +
                       " is outside the tabulated range 0.." +
                       std::to_string(max_degree()));
  return groups[static_cast<std::size_t>(k)];
}

FgAbGroup homology_bso(int n, int k) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (k < 0 || k > 2)
    throw OutsideTable("H_" + std::to_string(k) +
                       "(BSO(n); Z) is outside the degree <= 2 table");
  if (k == 0) return FgAbGroup::free(1);
  if (k == 1) return FgAbGroup();
  if (n == 1) return FgAbGroup();
  if (n == 2) return FgAbGroup::free(1);
  return FgAbGroup::cyclic(2);
}

FgAbGroup homology_bspin(int n, int k) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (k < 0 || k > 4)
    throw OutsideTable("H_" + std::to_string(k) +
                       "(BSpin(n); Z) is outside the degree <= 4 table");
  if (k == 0) return FgAbGroup::free(1);
  if (n == 1) return k % 2 == 1 ? FgAbGroup::cyclic(2) : FgAbGroup();
  if (n == 2) return k % 2 == 0 ? FgAbGroup::free(1) : FgAbGroup();
  return k == 4 ? FgAbGroup::free(1) : FgAbGroup();
}

GradedGroupList bso_homology(int n) {
  GradedGroupList l;
  for (int k = 0; k <= 2; ++k) l.groups.push_back(homology_bso(n, k));
  return l;
}

GradedGroupList bspin_homology(int n) {
  GradedGroupList l;
  for (int k = 0; k <= 4; ++k) l.groups.push_back(homology_bspin(n, k));
  return l;
}

FgAbGroup kunneth_homology(const GradedGroupList& hx, const GradedGroupList& hy,
                           int k) {
  if (k < 0) throw std::invalid_argument("negative homology degree");
  FgAbGroup total;
  for (int r = 0; r <= k; ++r)
    total = direct_sum(total, tensor(hx.at(r), hy.at(k - r)));
  for (int r = 0; r <= k - 1; ++r)
    total = direct_sum(total, tor(hx.at(r), hy.at(k - 1 - r)));
  return total;
}

FgAbGroup uct_cohomology(const FgAbGroup& h_n, const FgAbGroup& h_n_minus_1,
                         const FgAbGroup& coeff) {
  return direct_sum(hom(h_n, coeff), ext(h_n_minus_1, coeff));
}

FgAbGroup h2_bso_indefinite(int p, int q) {
  if (p < 2 || q < 2)
    throw std::invalid_argument(
        "the degree-2 pipeline requires both ranks >= 2");
  const GradedGroupList hp = bso_homology(p);
  const GradedGroupList hq = bso_homology(q);
  return uct_cohomology(kunneth_homology(hp, hq, 2),
                        kunneth_homology(hp, hq, 1), FgAbGroup::free(1));
}

H4Result h4_bspin(int n) {
  if (n < 3)
    throw std::invalid_argument(
        "H^4(BSpin(n); Z) has a named generator only for n >= 3; use the "
        "low-degree tables for smaller ranks");
  if (n == 4)
    return H4Result{FgAbGroup::free(2),
                    {make_class(ClassName::half_p1, 0, 1),
                     make_class(ClassName::half_p1, 0, 2)}};
  return H4Result{FgAbGroup::free(1), {make_class(ClassName::half_p1)}};
}

Int betti_bspin(int n, int k) {
  if (n < 3)
    throw std::invalid_argument("rational Betti numbers need rank >= 3");
  if (k < 0) throw std::invalid_argument("negative cohomology degree");
  std::vector<int> exponents;
  if (n % 2 == 1) {
    for (int j = 1; 4 * j <= 2 * (n - 1); ++j) exponents.push_back(4 * j);
  } else {
    for (int j = 1; j <= n / 2 - 1; ++j) exponents.push_back(4 * j);
    exponents.push_back(n);
  }
  std::vector<Int> coeff(static_cast<std::size_t>(k) + 1, Int(0));
  coeff[0] = 1;
  for (int e : exponents)
    for (int i = e; i <= k; ++i)
      coeff[static_cast<std::size_t>(i)] +=
          coeff[static_cast<std::size_t>(i - e)];
  return coeff[static_cast<std::size_t>(k)];
}

SplitCheck kunneth_split_check(const GradedGroupList& hx,
                               const GradedGroupList& hy, int n,
                               const FgAbGroup& coeff, bool chain_flat) {
  SplitCheck result;
  if (!chain_flat) result.failed_conditions.push_back(1);

  const FgAbGroup product_n = kunneth_homology(hx, hy, n);
  if (!(product_n == direct_sum(hx.at(n), hy.at(n))))
    result.failed_conditions.push_back(2);

  bool tor_vanishes = true;
  for (int r = 0; r <= n - 1; ++r)
    if (!tor(hx.at(r), hy.at(n - 1 - r)).is_trivial()) tor_vanishes = false;
  if (!tor_vanishes) result.failed_conditions.push_back(3);

  const bool ext_vanishes =
      ext(hx.at(n - 1), coeff).is_trivial() &&
      ext(hy.at(n - 1), coeff).is_trivial() &&
      ext(kunneth_homology(hx, hy, n - 1), coeff).is_trivial();
  if (!ext_vanishes) result.failed_conditions.push_back(4);

  result.split = result.failed_conditions.empty();
  return result;
}

RingPresentation ring_generators(RingFamily family, int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  RingPresentation pres;
  switch (family) {
    case RingFamily::BU:
      for (int i = 1; i <= n; ++i)
        pres.generators.push_back({"c" + std::to_string(i), 2 * i});
      break;
    case RingFamily::BSU:
      for (int i = 2; i <= n; ++i)
        pres.generators.push_back({"c" + std::to_string(i), 2 * i});
      break;
    case RingFamily::BSp:
      for (int i = 1; i <= n; ++i)
        pres.generators.push_back({"p" + std::to_string(i) + "H", 4 * i});
      break;
    case RingFamily::BSOQ:
      for (int i = 1; i <= n / 2; ++i)
        pres.generators.push_back({"p" + std::to_string(i), 4 * i});
      if (n % 2 == 0) {
        pres.generators.push_back({"e", n});
        pres.relation = "p" + std::to_string(n / 2) + " = e^2";
      }
      break;
  }
  return pres;
}

}  // namespace towercalc
