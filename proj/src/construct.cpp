#include "pglrep/construct.hpp"

#include <string>

#include "pglrep/errors.hpp"

namespace pglrep {

namespace {

RatMatrix seed(CatalogueName name) {
  switch (name) {
    case CatalogueName::X: return RatMatrix::from_rows({{0, 1}, {1, 0}});
    case CatalogueName::XPrime:
    case CatalogueName::Y: return RatMatrix::diagonal({1, -1});
    case CatalogueName::YPrime: return RatMatrix::diagonal({-1, 1});
    case CatalogueName::Z: return RatMatrix::from_rows({{0, -1}, {1, 0}});
    case CatalogueName::W:
    case CatalogueName::WPrime: break;
  }
  throw BadDimension(std::string(to_string(name)) + " is not defined for n = 2");
}

void check_even(int n, int minimum) {
  if (n < minimum || n % 2 != 0) {
    throw BadDimension("n must be even and at least " + std::to_string(minimum) + ", got " +
                       std::to_string(n));
  }
}

}  // namespace

const char* to_string(CatalogueName name) {
  switch (name) {
    case CatalogueName::X: return "X";
    case CatalogueName::XPrime: return "X'";
    case CatalogueName::Y: return "Y";
    case CatalogueName::YPrime: return "Y'";
    case CatalogueName::Z: return "Z";
    case CatalogueName::W: return "W";
    case CatalogueName::WPrime: return "W'";
  }
  return "?";
}

RatMatrix catalogue_matrix(CatalogueName name, int n) {
  const bool is_w = name == CatalogueName::W || name == CatalogueName::WPrime;
  check_even(n, is_w ? 4 : 2);
  if (n == 2) return seed(name);

  switch (name) {
    case CatalogueName::X:
    case CatalogueName::XPrime:
      return RatMatrix::block_diagonal(seed(name), catalogue_matrix(name, n - 2));
    case CatalogueName::Y:
    case CatalogueName::YPrime:
      return RatMatrix::block_diagonal(seed(name), RatMatrix::identity(n - 2));
    case CatalogueName::Z:
      return RatMatrix::block_diagonal(seed(name), catalogue_matrix(CatalogueName::XPrime, n - 2));
    case CatalogueName::W:
      return RatMatrix::block_diagonal(seed(CatalogueName::X),
                                       catalogue_matrix(CatalogueName::Z, n - 2));
    case CatalogueName::WPrime:
      return RatMatrix::block_diagonal(seed(CatalogueName::Z),
                                       catalogue_matrix(CatalogueName::X, n - 2));
  }
  throw BadDimension("unknown catalogue matrix");
}

std::pair<RatMatrix, RatMatrix> pair_for(const PairSpec& spec, int n) {
  check_even(n, 4);
  using enum CatalogueName;
  auto m = [n](CatalogueName name) { return catalogue_matrix(name, n); };
  const bool first_so = spec.first == OrthComponent::SOn;
  const bool second_so = spec.second == OrthComponent::SOn;

  if (spec.kind == PairKind::Commuting) {
    if (first_so && second_so) return {RatMatrix::identity(n), RatMatrix::identity(n)};
    if (first_so) return {RatMatrix::identity(n), m(Y)};
    if (second_so) return {m(Y), RatMatrix::identity(n)};
    return {m(Y), m(YPrime)};
  }

  if (n % 4 == 0) {
    if (first_so && second_so) return {m(X), m(XPrime)};
    if (first_so) return {m(X), m(Z)};
    if (second_so) return {m(Z), m(X)};
    return {m(W), m(WPrime)};
  }
  if (first_so && second_so) return {m(W), m(WPrime)};
  if (first_so) return {m(Z), m(X)};
  if (second_so) return {m(X), m(Z)};
  return {m(X), m(XPrime)};
}

SurfaceRep build_representation(int genus, int n, const InvariantClass& target) {
  if (genus < 2) throw BadInput("genus must be at least 2, got " + std::to_string(genus));
  check_even(n, 4);
  if (target.mu1.size() != 2 * genus) {
    throw InvalidClass("mu1 must have " + std::to_string(2 * genus) + " bits, got " +
                       std::to_string(target.mu1.size()));
  }
  if (!target.valid()) throw InvalidClass("mu2 = One requires mu1 = 0");

  auto comp = [&](int k) {
    return target.mu1.get(k) ? OrthComponent::OMinus : OrthComponent::SOn;
  };

  std::vector<RatMatrix> gens;
  gens.reserve(static_cast<std::size_t>(2 * genus));
  if (target.mu2 == Mu2Value::One) {
    // Commuting involutions whose Spin lifts e1e2 and e1e3 anticommute.
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(1));
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(1));
    a[0] = a[1] = -1;
    b[0] = b[2] = -1;
    gens.push_back(RatMatrix::diagonal(a));
    gens.push_back(RatMatrix::diagonal(b));
  } else {
    const PairKind kind =
        target.mu2 == Mu2Value::Omega ? PairKind::Anticommuting : PairKind::Commuting;
    auto [a, b] = pair_for({kind, comp(0), comp(1)}, n);
    gens.push_back(std::move(a));
    gens.push_back(std::move(b));
  }
  for (int i = 1; i < genus; ++i) {
    auto [a, b] = pair_for({PairKind::Commuting, comp(2 * i), comp(2 * i + 1)}, n);
    gens.push_back(std::move(a));
    gens.push_back(std::move(b));
  }

  SurfaceRep rep(genus, std::move(gens));
  if (invariants(rep) != target) {
    throw std::logic_error("constructed representation has invariants " +
                           to_string(invariants(rep)) + ", wanted " + to_string(target));
  }
  return rep;
}

}  // namespace pglrep
