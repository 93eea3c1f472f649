#include "pglrep/surfrep.hpp"

#include <string>
#include <utility>

#include "pglrep/clifford.hpp"
#include "pglrep/errors.hpp"

namespace pglrep {

SurfaceRep::SurfaceRep(int genus, std::vector<RatMatrix> generators)
    : genus_(genus), n_(0), generators_(std::move(generators)) {
  if (genus < 2) throw BadInput("genus must be at least 2, got " + std::to_string(genus));
  if (static_cast<int>(generators_.size()) != 2 * genus) {
    throw BadInput("expected " + std::to_string(2 * genus) + " generators, got " +
                   std::to_string(generators_.size()));
  }
  n_ = generators_.front().size();
  if (n_ < 4 || n_ % 2 != 0) {
    throw BadDimension("n must be even and at least 4, got " + std::to_string(n_));
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const int label = static_cast<int>(k);
    if (generators_[k].size() != n_) {
      throw BadDimension("generator " + generator_label(label) + " has size " +
                         std::to_string(generators_[k].size()) + ", expected " + std::to_string(n_));
    }
    if (!is_orthogonal(generators_[k])) {
      throw NotOrthogonal("generator " + generator_label(label) + " is not orthogonal");
    }
  }
  check_relation(generators_);
}

std::string generator_label(int index) {
  return std::string(index % 2 == 0 ? "A" : "B") + std::to_string(index / 2 + 1);
}

const char* to_string(Delta2 d) { return d == Delta2::PlusI ? "+I" : "-I"; }

const char* to_string(Mu2Value m) {
  switch (m) {
    case Mu2Value::Zero: return "Zero";
    case Mu2Value::One: return "One";
    case Mu2Value::Omega: return "Omega";
  }
  return "?";
}

std::strong_ordering operator<=>(const InvariantClass& x, const InvariantClass& y) {
  if (auto c = x.mu1 <=> y.mu1; c != 0) return c;
  return x.mu2 <=> y.mu2;
}

std::string to_string(const InvariantClass& c) {
  return "(" + c.mu1.to_string() + ", " + to_string(c.mu2) + ")";
}

Delta2 check_relation(std::span<const RatMatrix> generators) {
  if (generators.empty() || generators.size() % 2 != 0) {
    throw BadInput("relation check needs an even, nonempty generator list");
  }
  const int n = generators.front().size();
  RatMatrix product = RatMatrix::identity(n);
  for (std::size_t i = 0; i < generators.size(); i += 2) {
    product = product * commutator(generators[i], generators[i + 1]);
  }
  if (product.is_identity()) return Delta2::PlusI;
  if ((-product).is_identity()) return Delta2::MinusI;
  throw RelationViolated("product of commutators [A_i, B_i] is neither +I nor -I");
}

Delta2 check_relation(const SurfaceRep& rep) { return check_relation(rep.generators()); }

Z2Vector delta1(const SurfaceRep& rep) {
  const auto gens = rep.generators();
  Z2Vector bits(static_cast<int>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bits.set(static_cast<int>(k), component(gens[k]) == OrthComponent::OMinus);
  }
  return bits;
}

Delta2 delta2(const SurfaceRep& rep) { return check_relation(rep); }

Mu2Value tilde_delta(const SurfaceRep& rep) {
  if (!delta1(rep).is_zero()) {
    throw Delta1NotZero("tilde_delta needs every generator in SO(n)");
  }
  std::vector<CliffordElement> lifts;
  lifts.reserve(rep.generators().size());
  for (const auto& m : rep.generators()) lifts.push_back(lift_orthogonal(m));

  KernelElement k;
  try {
    k = commutator_product(lifts);
  } catch (const NotInKernel& e) {
    throw RelationViolated(e.what());
  }
  switch (k) {
    case KernelElement::One: return Mu2Value::Zero;
    case KernelElement::MinusOne: return Mu2Value::One;
    case KernelElement::Omega:
    case KernelElement::MinusOmega: return Mu2Value::Omega;
  }
  return Mu2Value::Zero;
}

InvariantClass invariants(const SurfaceRep& rep) {
  InvariantClass c;
  c.mu1 = delta1(rep);
  if (c.mu1.is_zero()) {
    c.mu2 = tilde_delta(rep);
  } else {
    c.mu2 = delta2(rep) == Delta2::MinusI ? Mu2Value::Omega : Mu2Value::Zero;
  }
  return c;
}

}  // namespace pglrep
