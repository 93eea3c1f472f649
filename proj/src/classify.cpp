#include "pglrep/classify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pglrep/errors.hpp"

namespace pglrep {

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::vector<int> orders, std::uint64_t order_cap) : orders_(std::move(orders)) {
  for (int m : orders_) {
    if (m < 2) throw BadInput("cyclic factor orders must be at least 2, got " + std::to_string(m));
    order_ *= static_cast<std::uint64_t>(m);
    if (order_ > order_cap) {
      throw BadInput("group order exceeds the enumeration cap of " + std::to_string(order_cap));
    }
  }
}

GroupElement FinAbGroup::generator(int j) const {
  GroupElement e = zero();
  e.at(static_cast<std::size_t>(j)) = 1;
  return e;
}

GroupElement FinAbGroup::reduce(GroupElement x) const {
  if (x.size() != orders_.size()) throw BadInput("element has the wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] %= orders_[i];
    if (x[i] < 0) x[i] += orders_[i];
  }
  return x;
}

GroupElement FinAbGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (x.size() != orders_.size() || y.size() != orders_.size()) {
    throw BadInput("element has the wrong number of coordinates");
  }
  GroupElement z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return reduce(std::move(z));
}

GroupElement FinAbGroup::negate(const GroupElement& x) const {
  GroupElement z = x;
  for (auto& c : z) c = -c;
  return reduce(std::move(z));
}

GroupElement FinAbGroup::subtract(const GroupElement& x, const GroupElement& y) const {
  return add(x, negate(y));
}

bool FinAbGroup::contains(const GroupElement& x) const {
  if (x.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= orders_[i]) return false;
  }
  return true;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  GroupElement x = zero();
  for (std::uint64_t k = 0; k < order_; ++k) {
    out.push_back(x);
    for (int i = rank() - 1; i >= 0; --i) {
      if (++x[static_cast<std::size_t>(i)] < orders_[static_cast<std::size_t>(i)]) break;
      x[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Actions

GroupElement Endomorphism::apply(const FinAbGroup& group, const GroupElement& x) const {
  if (static_cast<int>(images.size()) != group.rank() || x.size() != images.size()) {
    throw BadInput("endomorphism does not match the group rank");
  }
  GroupElement y = group.zero();
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[j] * images[j][i];
  }
  return group.reduce(std::move(y));
}

GroupElement GroupAction::apply(const FinAbGroup& pi0, const FinAbGroup& pi1, const GroupElement& g,
                                const GroupElement& x) const {
  const GroupElement reduced = pi0.reduce(g);
  GroupElement y = x;
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    for (int t = 0; t < reduced[j]; ++t) y = generator_maps.at(j).apply(pi1, y);
  }
  return y;
}

void GroupAction::validate(const FinAbGroup& pi0, const FinAbGroup& pi1) const {
  if (static_cast<int>(generator_maps.size()) != pi0.rank()) {
    throw BadInput("action needs one map per generator of pi_0");
  }
  const auto elems = pi1.elements();
  for (std::size_t j = 0; j < generator_maps.size(); ++j) {
    const Endomorphism& phi = generator_maps[j];
    if (static_cast<int>(phi.images.size()) != pi1.rank()) {
      throw BadInput("action map needs one image per generator of pi_1");
    }
    for (std::size_t i = 0; i < phi.images.size(); ++i) {
      if (!pi1.contains(phi.images[i])) throw BadInput("action image is not a reduced element");
      GroupElement scaled = phi.images[i];
      for (auto& c : scaled) c *= pi1.orders()[i];
      if (pi1.reduce(scaled) != pi1.zero()) {
        throw BadInput("action map does not respect the order of generator " + std::to_string(i));
      }
    }
    std::set<GroupElement> image;
    for (const auto& x : elems) image.insert(phi.apply(pi1, x));
    if (image.size() != elems.size()) throw BadInput("action map is not an automorphism");
    // The generator of Z/m must act with order dividing m.
    for (const auto& x : elems) {
      GroupElement y = x;
      for (int t = 0; t < pi0.orders()[j]; ++t) y = phi.apply(pi1, y);
      if (y != x) throw BadInput("action of a pi_0 generator does not respect its order");
    }
  }
}

Subgroup gamma_subgroup(const FinAbGroup& pi0, const FinAbGroup& pi1, const GroupAction& action,
                        const std::vector<GroupElement>& mu1_image) {
  action.validate(pi0, pi1);
  std::set<GroupElement> gens;
  for (const auto& g : mu1_image) {
    if (!pi0.contains(pi0.reduce(g))) throw BadInput("mu1 image element is not in pi_0");
    for (const auto& x : pi1.elements()) {
      gens.insert(pi1.subtract(x, action.apply(pi0, pi1, g, x)));
    }
  }
  std::set<GroupElement> closure{pi1.zero()};
  std::vector<GroupElement> frontier{pi1.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        GroupElement y = pi1.add(x, s);
        if (closure.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

std::vector<GroupElement> classify_bundles(const FinAbGroup& pi0, const FinAbGroup& pi1,
                                           const GroupAction& action,
                                           const std::vector<GroupElement>& mu1_image) {
  const Subgroup gamma = gamma_subgroup(pi0, pi1, action, mu1_image);
  const std::set<GroupElement> gamma_set(gamma.begin(), gamma.end());
  for (const auto& phi : action.generator_maps) {
    for (const auto& x : gamma) {
      if (!gamma_set.contains(phi.apply(pi1, x))) {
        throw ActionNotDescending("pi_0 action does not preserve Gamma");
      }
    }
  }

  const auto pi0_elems = pi0.elements();
  std::set<GroupElement> seen;
  std::vector<GroupElement> reps;
  // Elements come in lexicographic order, so the first unseen element of an
  // orbit is its least member.
  for (const auto& x : pi1.elements()) {
    if (seen.contains(x)) continue;
    reps.push_back(x);
    for (const auto& g : pi0_elems) {
      const GroupElement gx = action.apply(pi0, pi1, g, x);
      for (const auto& y : gamma) seen.insert(pi1.add(gx, y));
    }
  }
  return reps;
}

PoGroupData po_group_data(int n) {
  if (n < 4 || n % 2 != 0) throw BadInput("PO(n) data needs n even and >= 4");
  PoGroupData d;
  d.pi0 = FinAbGroup({2});
  if (n % 4 == 0) {
    // Generators: -1 and omega. Odd elements send omega to -omega = (-1) + omega.
    d.pi1 = FinAbGroup({2, 2});
    d.action.generator_maps = {Endomorphism{{{1, 0}, {1, 1}}}};
  } else {
    // Generator: omega, with omega^2 = -1. Odd elements negate.
    d.pi1 = FinAbGroup({4});
    d.action.generator_maps = {Endomorphism{{{3}}}};
  }
  return d;
}

KernelElement po_kernel_element(int n, const GroupElement& x) {
  const PoGroupData d = po_group_data(n);
  if (!d.pi1.contains(x)) throw BadInput("not an element of pi_1 PO(n)");
  if (n % 4 == 0) {
    static constexpr KernelElement table[2][2] = {
        {KernelElement::One, KernelElement::Omega},
        {KernelElement::MinusOne, KernelElement::MinusOmega}};
    return table[x[0]][x[1]];
  }
  static constexpr KernelElement table[4] = {KernelElement::One, KernelElement::Omega,
                                             KernelElement::MinusOne, KernelElement::MinusOmega};
  return table[x[0]];
}

// ---------------------------------------------------------------------------
// PO(n) classes

namespace {

void check_genus_n(int genus, int n) {
  if (genus < 2 || genus > kMaxEnumerationGenus) {
    throw BadInput("genus must be in [2, " + std::to_string(kMaxEnumerationGenus) + "], got " +
                   std::to_string(genus));
  }
  if (n < 4 || n % 2 != 0) throw BadInput("n must be even and at least 4, got " + std::to_string(n));
}

void check_class(const InvariantClass& cls, int genus) {
  if (cls.mu1.size() != 2 * genus) {
    throw InvalidClass("mu1 must have " + std::to_string(2 * genus) + " bits");
  }
  if (!cls.valid()) throw InvalidClass("mu2 = One requires mu1 = 0");
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

std::vector<InvariantClass> invariant_classes(int genus, int n) {
  check_genus_n(genus, n);
  const int bits = 2 * genus;
  std::vector<InvariantClass> out;
  out.reserve(pow2(bits + 1) + 1);
  const Z2Vector zero(bits);
  for (Mu2Value m : {Mu2Value::Zero, Mu2Value::One, Mu2Value::Omega}) out.push_back({zero, m});
  for (std::uint64_t v = 1; v < pow2(bits); ++v) {
    const Z2Vector mu1 = Z2Vector::from_integer(bits, v);
    out.push_back({mu1, Mu2Value::Zero});
    out.push_back({mu1, Mu2Value::Omega});
  }
  return out;
}

const char* to_string(LiftTarget t) {
  switch (t) {
    case LiftTarget::SOn: return "SO";
    case LiftTarget::Spinn: return "Spin";
    case LiftTarget::Pinn: return "Pin";
    case LiftTarget::On: return "O";
  }
  return "?";
}

bool lifts_to(const InvariantClass& cls, LiftTarget target) {
  if (!cls.valid()) throw InvalidClass("mu2 = One requires mu1 = 0");
  if (cls.mu1.is_zero()) {
    // With w1 = 0 an O(n) lift is an SO(n) lift and a Pin(n) lift a Spin(n) lift.
    switch (target) {
      case LiftTarget::SOn:
      case LiftTarget::On: return cls.mu2 != Mu2Value::Omega;
      case LiftTarget::Spinn:
      case LiftTarget::Pinn: return cls.mu2 == Mu2Value::Zero;
    }
  }
  if (target == LiftTarget::SOn || target == LiftTarget::Spinn) {
    throw TargetInvalidForClass(std::string("no ") + to_string(target) +
                                " lift question for a bundle with mu1 != 0");
  }
  return cls.mu2 == Mu2Value::Zero;
}

int z0(int n, int genus) {
  if (n % 2 != 0) throw BadInput("z0 is defined for even n only");
  const std::int64_t half = n / 2;
  return static_cast<int>(((genus - 1) * half * half) % 2 + 2) % 2;
}

std::uint64_t component_count(int n, int genus) {
  if (n < 2) throw BadInput("n must be at least 2");
  if (genus < 2 || genus > 31) throw BadInput("genus must be in [2, 31]");
  if (n == 2) return pow2(2 * genus + 1) + 4 * static_cast<std::uint64_t>(genus) - 5;
  if (n % 2 != 0) return 3;
  return pow2(2 * genus + 1) + 2;
}

int components_per_class(const InvariantClass& cls, int n, int genus) {
  check_genus_n(genus, n);
  check_class(cls, genus);
  const Mu2Value split = z0(n, genus) == 0 ? Mu2Value::Zero : Mu2Value::One;
  return cls.mu1.is_zero() && cls.mu2 == split ? 2 : 1;
}

ComponentReport component_report(int n, int genus) {
  ComponentReport report;
  for (auto& cls : invariant_classes(genus, n)) {
    const int m = components_per_class(cls, n, genus);
    report.total += static_cast<std::uint64_t>(m);
    report.entries.push_back({std::move(cls), m});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Twisted orthogonal side

bool TwistedClass::valid() const {
  if (mu1bar.size() == 0 || mu1bar.size() % 2 != 0) return false;
  const bool needs_w2 = mu1bar.is_zero() && degree % 2 == 0;
  if (needs_w2 != w2.has_value()) return false;
  return !w2 || *w2 == 0 || *w2 == 1;
}

std::string to_string(const TwistedClass& c) {
  std::string s = "(" + c.mu1bar.to_string() + ", ";
  if (c.w2) return s + "(" + std::to_string(*c.w2) + ", " + std::to_string(c.degree) + "))";
  return s + std::to_string(c.degree) + ")";
}

InvariantClass project_twisted(const TwistedClass& cls) {
  if (!cls.valid()) throw InvalidClass("malformed twisted class " + to_string(cls));
  InvariantClass out{cls.mu1bar, Mu2Value::Zero};
  if (cls.degree % 2 != 0) {
    out.mu2 = Mu2Value::Omega;
  } else if (cls.w2) {
    out.mu2 = *cls.w2 == 1 ? Mu2Value::One : Mu2Value::Zero;
  }
  return out;
}

EglComponentReport egl_component_counts(int degree, int genus, int n) {
  if (degree != 0 && degree != 1) throw BadInput("degree must be 0 or 1");
  check_genus_n(genus, n);
  const int bits = 2 * genus;
  const int split_w2 = z0(n, genus);

  EglComponentReport report;
  report.degree = degree;
  auto add = [&report](TwistedClass cls, int total, std::uint64_t fibre) {
    report.total += static_cast<std::uint64_t>(total);
    report.fibre_total += fibre;
    report.entries.push_back({std::move(cls), total, fibre});
  };

  const Z2Vector zero(bits);
  if (degree == 0) {
    // The (0, z0) class holds the extra components coming from the nonzero
    // minima: one per square root of LK in a fibre, one overall.
    for (int w2 : {0, 1}) {
      const bool split = w2 == split_w2;
      add({zero, w2, 0}, split ? 2 : 1, split ? pow2(bits) + 1 : 1);
    }
  } else {
    add({zero, std::nullopt, 1}, 1, 1);
  }
  for (std::uint64_t v = 1; v < pow2(bits); ++v) {
    add({Z2Vector::from_integer(bits, v), std::nullopt, degree}, 1, 1);
  }
  return report;
}

StiefelWhitney tensor_by_line_bundle(const Z2Vector& w1, int w2, const Z2Vector& f1, int n) {
  if (n % 2 != 0) throw BadInput("rank must be even");
  if (w2 != 0 && w2 != 1) throw BadInput("w2 must be 0 or 1");
  return {w1, (w2 + (symplectic_pairing(w1, f1) ? 1 : 0)) % 2};
}

std::int64_t moduli_dimension(int n, int genus) {
  if (n < 1) throw BadInput("n must be at least 1");
  if (genus < 2) throw BadInput("genus must be at least 2");
  return 2 * static_cast<std::int64_t>(n) * n * (genus - 1) + 2;
}

}  // namespace pglrep
