#include "pglrep/classify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "pglrep/clifford.hpp"
#include "pglrep/errors.hpp"

namespace pglrep {
namespace {

const FinAbGroup kZ2({2});

InvariantClass cls(const std::string& mu1, Mu2Value mu2) { return {Z2Vector::from_string(mu1), mu2}; }

// ---------------------------------------------------------------------------
// Finite abelian groups

TEST(FinAbGroup, Arithmetic) {
  const FinAbGroup g({2, 4});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.add({1, 3}, {1, 2}), (GroupElement{0, 1}));
  EXPECT_EQ(g.negate({1, 1}), (GroupElement{1, 3}));
  EXPECT_EQ(g.subtract({0, 0}, {0, 1}), (GroupElement{0, 3}));
  EXPECT_EQ(g.reduce({3, -1}), (GroupElement{1, 3}));
  EXPECT_TRUE(g.contains({1, 3}));
  EXPECT_FALSE(g.contains({2, 0}));
  EXPECT_EQ(g.elements().size(), 8u);
  EXPECT_EQ(g.elements().front(), (GroupElement{0, 0}));
  EXPECT_EQ(g.elements().back(), (GroupElement{1, 3}));
}

TEST(FinAbGroup, Errors) {
  EXPECT_THROW(FinAbGroup({1}), BadInput);
  EXPECT_THROW(FinAbGroup({256, 256, 2}), BadInput);
}

TEST(GroupAction, ValidateRejectsNonAutomorphism) {
  const FinAbGroup z4({4});
  GroupAction doubling{{Endomorphism{{{2}}}}};
  EXPECT_THROW(doubling.validate(kZ2, z4), BadInput);
  GroupAction flip{{Endomorphism{{{3}}}}};
  EXPECT_NO_THROW(flip.validate(kZ2, z4));
}

// ---------------------------------------------------------------------------
// Gamma subgroup and the general classifier

TEST(GammaSubgroup, Examples) {
  const PoGroupData p6 = po_group_data(6);
  EXPECT_EQ(gamma_subgroup(p6.pi0, p6.pi1, p6.action, {{0}}), (Subgroup{{0}}));
  EXPECT_EQ(gamma_subgroup(p6.pi0, p6.pi1, p6.action, {{0}, {1}}), (Subgroup{{0}, {2}}));

  // n = 0 mod 4: omega - (-omega) = -1, i.e. (1, 0) in the (-1, omega) basis.
  const PoGroupData p4 = po_group_data(4);
  EXPECT_EQ(gamma_subgroup(p4.pi0, p4.pi1, p4.action, {{0}, {1}}), (Subgroup{{0, 0}, {1, 0}}));
}

TEST(ClassifyBundles, PoScenarios) {
  for (int n : {4, 6, 8, 10}) {
    SCOPED_TRACE(n);
    const PoGroupData p = po_group_data(n);
    const auto zero = classify_bundles(p.pi0, p.pi1, p.action, {{0}});
    const auto nonzero = classify_bundles(p.pi0, p.pi1, p.action, {{0}, {1}});
    ASSERT_EQ(zero.size(), 3u);
    ASSERT_EQ(nonzero.size(), 2u);

    std::set<KernelElement> zero_kernel;
    for (const auto& x : zero) zero_kernel.insert(po_kernel_element(n, x));
    EXPECT_EQ(zero_kernel, (std::set<KernelElement>{KernelElement::One, KernelElement::MinusOne,
                                                    KernelElement::Omega}));
    std::set<KernelElement> nonzero_kernel;
    for (const auto& x : nonzero) nonzero_kernel.insert(po_kernel_element(n, x));
    EXPECT_EQ(nonzero_kernel, (std::set<KernelElement>{KernelElement::One, KernelElement::Omega}));
  }
}

TEST(ClassifyBundles, TrivialActionGivesOneClassPerElement) {
  const FinAbGroup z6({6});
  const GroupAction identity{{Endomorphism{{{1}}}}};
  EXPECT_EQ(classify_bundles(kZ2, z6, identity, {{0}}).size(), 6u);
  EXPECT_EQ(classify_bundles(kZ2, z6, identity, {{0}, {1}}).size(), 6u);
}

TEST(ClassifyBundles, ActionNotDescending) {
  // pi0 = Z2 x Z2 on pi1 = Z2 x Z2: the first generator swaps the factors and
  // Gamma = {0, (1,1)} is then not preserved by the second, which sends
  // (1,1) to (0,1).
  const FinAbGroup pi0({2, 2});
  const FinAbGroup pi1({2, 2});
  const GroupAction action{{Endomorphism{{{0, 1}, {1, 0}}}, Endomorphism{{{1, 0}, {1, 1}}}}};
  EXPECT_THROW(classify_bundles(pi0, pi1, action, {{0, 0}, {1, 0}}), ActionNotDescending);
}

// The PO(n) tables must agree with the Clifford algebra: omega^2 = +1 iff
// n = 0 mod 4 (so pi_1 splits), and an odd versor sends omega to -omega.
TEST(PoGroupData, AgreesWithClifford) {
  for (int n = 4; n <= 12; n += 2) {
    SCOPED_TRACE(n);
    const CliffordElement w = volume_element(n);
    const CliffordElement w2 = w * w;
    const PoGroupData p = po_group_data(n);
    if (n % 4 == 0) {
      EXPECT_EQ(w2, CliffordElement::scalar(n, 1));
      EXPECT_EQ(p.pi1.orders(), (std::vector<int>{2, 2}));
    } else {
      EXPECT_EQ(w2, CliffordElement::scalar(n, -1));
      EXPECT_EQ(p.pi1.orders(), (std::vector<int>{4}));
    }
    const CliffordElement e1 = CliffordElement::basis_vector(n, 0);
    const CliffordElement conj = e1 * w * versor_inverse(e1);
    EXPECT_EQ(conj, CliffordElement::scalar(n, -1) * w);

    for (const GroupElement& x : p.pi1.elements()) {
      const GroupElement moved = p.action.apply(p.pi0, p.pi1, {1}, x);
      const KernelElement before = po_kernel_element(n, x);
      const KernelElement after = po_kernel_element(n, moved);
      const bool is_omega_class = before == KernelElement::Omega || before == KernelElement::MinusOmega;
      if (is_omega_class) {
        EXPECT_NE(before, after);
      } else {
        EXPECT_EQ(before, after);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Invariant classes and lifting

TEST(InvariantClasses, Counts) {
  EXPECT_EQ(invariant_classes(2, 4).size(), 33u);
  EXPECT_EQ(invariant_classes(3, 4).size(), 129u);
  for (int g = 2; g <= 5; ++g) {
    const auto classes = invariant_classes(g, 6);
    EXPECT_EQ(classes.size(), (std::size_t{1} << (2 * g + 1)) + 1);
    EXPECT_EQ(std::set<InvariantClass>(classes.begin(), classes.end()).size(), classes.size());
    int ones = 0;
    for (const auto& c : classes) {
      EXPECT_TRUE(c.valid());
      if (c.mu2 == Mu2Value::One) ++ones;
    }
    EXPECT_EQ(ones, 1);
  }
}

TEST(InvariantClasses, Ordering) {
  const auto classes = invariant_classes(2, 4);
  EXPECT_EQ(classes[0], cls("0000", Mu2Value::Zero));
  EXPECT_EQ(classes[1], cls("0000", Mu2Value::One));
  EXPECT_EQ(classes[2], cls("0000", Mu2Value::Omega));
  EXPECT_EQ(classes[3], cls("0001", Mu2Value::Zero));
  EXPECT_EQ(classes[4], cls("0001", Mu2Value::Omega));
  EXPECT_EQ(classes.back(), cls("1111", Mu2Value::Omega));
}

TEST(InvariantClasses, Errors) {
  EXPECT_THROW(invariant_classes(1, 4), BadInput);
  EXPECT_THROW(invariant_classes(kMaxEnumerationGenus + 1, 4), BadInput);
  EXPECT_THROW(invariant_classes(2, 5), BadInput);
  EXPECT_THROW(invariant_classes(2, 2), BadInput);
}

TEST(LiftsTo, Examples) {
  EXPECT_TRUE(lifts_to(cls("0000", Mu2Value::Zero), LiftTarget::Spinn));
  EXPECT_TRUE(lifts_to(cls("0000", Mu2Value::One), LiftTarget::SOn));
  EXPECT_FALSE(lifts_to(cls("0000", Mu2Value::One), LiftTarget::Spinn));
  EXPECT_FALSE(lifts_to(cls("1000", Mu2Value::Omega), LiftTarget::Pinn));
}

TEST(LiftsTo, TruthTable) {
  struct Row {
    InvariantClass c;
    bool so, spin, pin, o;
  };
  const Row rows[] = {
      {cls("0000", Mu2Value::Zero), true, true, true, true},
      {cls("0000", Mu2Value::One), true, false, false, true},
      {cls("0000", Mu2Value::Omega), false, false, false, false},
      {cls("0110", Mu2Value::Zero), false, false, true, true},
      {cls("0110", Mu2Value::Omega), false, false, false, false},
  };
  for (const Row& r : rows) {
    SCOPED_TRACE(to_string(r.c));
    EXPECT_EQ(lifts_to(r.c, LiftTarget::Pinn), r.pin);
    EXPECT_EQ(lifts_to(r.c, LiftTarget::On), r.o);
    if (r.c.mu1.is_zero()) {
      EXPECT_EQ(lifts_to(r.c, LiftTarget::SOn), r.so);
      EXPECT_EQ(lifts_to(r.c, LiftTarget::Spinn), r.spin);
    } else {
      EXPECT_THROW(lifts_to(r.c, LiftTarget::SOn), TargetInvalidForClass);
      EXPECT_THROW(lifts_to(r.c, LiftTarget::Spinn), TargetInvalidForClass);
    }
  }
  EXPECT_THROW(lifts_to(cls("1000", Mu2Value::One), LiftTarget::On), InvalidClass);
}

TEST(LiftsTo, SpinImpliesSo) {
  for (const auto& c : invariant_classes(3, 4)) {
    if (!c.mu1.is_zero()) continue;
    if (lifts_to(c, LiftTarget::Spinn)) EXPECT_TRUE(lifts_to(c, LiftTarget::SOn));
  }
}

// ---------------------------------------------------------------------------
// Component counts

TEST(Z0, Examples) {
  EXPECT_EQ(z0(4, 2), 0);
  EXPECT_EQ(z0(4, 3), 0);
  EXPECT_EQ(z0(6, 2), 1);
  EXPECT_EQ(z0(6, 3), 0);
  EXPECT_THROW(z0(5, 2), BadInput);
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(4, 2), 34u);
  EXPECT_EQ(component_count(4, 3), 130u);
  EXPECT_EQ(component_count(6, 4), 514u);
  EXPECT_EQ(component_count(3, 5), 3u);
  EXPECT_EQ(component_count(5, 2), 3u);
  EXPECT_EQ(component_count(2, 2), 35u);
}

TEST(ComponentsPerClass, Examples) {
  EXPECT_EQ(components_per_class(cls("0000", Mu2Value::Zero), 4, 2), 2);
  EXPECT_EQ(components_per_class(cls("0000", Mu2Value::One), 4, 2), 1);
  EXPECT_EQ(components_per_class(cls("1010", Mu2Value::Omega), 4, 2), 1);
  EXPECT_EQ(components_per_class(cls("0000", Mu2Value::One), 6, 2), 2);
  EXPECT_EQ(components_per_class(cls("0000", Mu2Value::Zero), 6, 2), 1);
}

TEST(ComponentsPerClass, SumMatchesComponentCount) {
  for (int n : {4, 6, 8}) {
    for (int g : {2, 3, 4}) {
      std::uint64_t sum = 0;
      for (const auto& c : invariant_classes(g, n)) sum += static_cast<std::uint64_t>(components_per_class(c, n, g));
      EXPECT_EQ(sum, component_count(n, g)) << "n=" << n << " g=" << g;
      const ComponentReport report = component_report(n, g);
      EXPECT_EQ(report.total, sum);
      EXPECT_EQ(report.entries.size(), invariant_classes(g, n).size());
    }
  }
}

// ---------------------------------------------------------------------------
// Twisted orthogonal side

TEST(EglComponentCounts, Examples) {
  const auto d0 = egl_component_counts(0, 2, 4);
  EXPECT_EQ(d0.total, 18u);
  EXPECT_EQ(d0.fibre_total, 33u);
  const auto d1 = egl_component_counts(1, 2, 4);
  EXPECT_EQ(d1.total, 16u);
  EXPECT_EQ(d1.fibre_total, 16u);
  EXPECT_EQ(egl_component_counts(0, 3, 4).total, 66u);
  EXPECT_THROW(egl_component_counts(2, 2, 4), BadInput);
}

TEST(EglComponentCounts, ClosedForms) {
  for (int g : {2, 3, 4}) {
    for (int n : {4, 6}) {
      const std::uint64_t q = std::uint64_t{1} << (2 * g);
      const auto d0 = egl_component_counts(0, g, n);
      const auto d1 = egl_component_counts(1, g, n);
      EXPECT_EQ(d0.total, q + 2);
      EXPECT_EQ(d0.fibre_total, 2 * q + 1);
      EXPECT_EQ(d1.total, q);
      EXPECT_EQ(d1.fibre_total, q);
      std::uint64_t sum = 0;
      for (const auto& e : d0.entries) sum += static_cast<std::uint64_t>(e.total_multiplicity);
      EXPECT_EQ(sum, d0.total);
    }
  }
}

TEST(ProjectTwisted, Examples) {
  EXPECT_EQ(project_twisted({Z2Vector(4), 1, 0}), cls("0000", Mu2Value::One));
  EXPECT_EQ(project_twisted({Z2Vector(4), 0, 0}), cls("0000", Mu2Value::Zero));
  EXPECT_EQ(project_twisted({Z2Vector(4), std::nullopt, 1}), cls("0000", Mu2Value::Omega));
  EXPECT_EQ(project_twisted({Z2Vector::from_string("0100"), std::nullopt, 2}), cls("0100", Mu2Value::Zero));
  EXPECT_EQ(project_twisted({Z2Vector::from_string("0100"), std::nullopt, -3}), cls("0100", Mu2Value::Omega));
}

TEST(ProjectTwisted, RejectsMalformedPayload) {
  EXPECT_THROW(project_twisted({Z2Vector(4), std::nullopt, 0}), InvalidClass);
  EXPECT_THROW(project_twisted({Z2Vector(4), 1, 1}), InvalidClass);
  EXPECT_THROW(project_twisted({Z2Vector::from_string("1000"), 0, 0}), InvalidClass);
}

TEST(ProjectTwisted, SurjectiveFromDegreeZeroAndOne) {
  for (int g : {2, 3}) {
    std::set<InvariantClass> image;
    for (int deg : {0, 1}) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * g)); ++v) {
        const Z2Vector mu1 = Z2Vector::from_integer(2 * g, v);
        if (mu1.is_zero() && deg == 0) {
          image.insert(project_twisted({mu1, 0, deg}));
          image.insert(project_twisted({mu1, 1, deg}));
        } else {
          image.insert(project_twisted({mu1, std::nullopt, deg}));
        }
      }
    }
    const auto classes = invariant_classes(g, 4);
    EXPECT_EQ(image, std::set<InvariantClass>(classes.begin(), classes.end()));
  }
}

TEST(TensorByLineBundle, Examples) {
  const Z2Vector zero(4);
  const Z2Vector a1 = Z2Vector::from_string("1000");
  const Z2Vector b1 = Z2Vector::from_string("0100");
  EXPECT_EQ(tensor_by_line_bundle(zero, 1, b1, 4), (StiefelWhitney{zero, 1}));
  EXPECT_EQ(tensor_by_line_bundle(a1, 0, b1, 4), (StiefelWhitney{a1, 1}));
  EXPECT_EQ(tensor_by_line_bundle(a1, 0, a1, 4), (StiefelWhitney{a1, 0}));
}

TEST(TensorByLineBundle, InvolutionInF1) {
  for (std::uint64_t w = 0; w < 16; ++w) {
    for (std::uint64_t f = 0; f < 16; ++f) {
      const Z2Vector w1 = Z2Vector::from_integer(4, w);
      const Z2Vector f1 = Z2Vector::from_integer(4, f);
      for (int w2 : {0, 1}) {
        const StiefelWhitney once = tensor_by_line_bundle(w1, w2, f1, 6);
        EXPECT_EQ(tensor_by_line_bundle(once.w1, once.w2, f1, 6), (StiefelWhitney{w1, w2}));
      }
    }
  }
}

TEST(ModuliDimension, Examples) {
  EXPECT_EQ(moduli_dimension(4, 2), 34);
  EXPECT_EQ(moduli_dimension(3, 2), 20);
  EXPECT_EQ(moduli_dimension(1, 2), 4);
}

}  // namespace
}  // namespace pglrep
