#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pglrep/clifford.hpp"
#include "pglrep/surfrep.hpp"
#include "pglrep/z2vector.hpp"

namespace pglrep {

// ---------------------------------------------------------------------------
// Finite abelian groups and the general bundle classifier
// ---------------------------------------------------------------------------

// Coefficient vector with respect to the cyclic generators of a FinAbGroup.
using GroupElement = std::vector<int>;

// Direct product of cyclic groups Z/m_1 x ... x Z/m_k (every m_i >= 2).
class FinAbGroup {
 public:
  // Upper bound on the order accepted by the brute-force routines.
  static constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 16;

  FinAbGroup() = default;
  // Throws BadInput for a factor < 2 or an order above `order_cap`.
  explicit FinAbGroup(std::vector<int> orders, std::uint64_t order_cap = kDefaultOrderCap);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::uint64_t order() const { return order_; }

  GroupElement zero() const { return GroupElement(orders_.size(), 0); }
  GroupElement generator(int j) const;
  GroupElement reduce(GroupElement x) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement subtract(const GroupElement& x, const GroupElement& y) const;
  bool contains(const GroupElement& x) const;

  // All elements in lexicographic order of coefficient vectors.
  std::vector<GroupElement> elements() const;

 private:
  std::vector<int> orders_;
  std::uint64_t order_ = 1;
};

// Endomorphism of a FinAbGroup, stored as the images of its generators.
struct Endomorphism {
  std::vector<GroupElement> images;

  GroupElement apply(const FinAbGroup& group, const GroupElement& x) const;
};

// Action of pi_0 on pi_1: one automorphism of pi_1 per generator of pi_0.
struct GroupAction {
  std::vector<Endomorphism> generator_maps;

  // Action of an arbitrary pi_0 element (composite of generator powers).
  GroupElement apply(const FinAbGroup& pi0, const FinAbGroup& pi1, const GroupElement& g,
                     const GroupElement& x) const;
  // Throws BadInput unless every map is a well-defined automorphism.
  void validate(const FinAbGroup& pi0, const FinAbGroup& pi1) const;
};

// Sorted list of the elements of a subgroup of pi_1.
using Subgroup = std::vector<GroupElement>;

// Subgroup of pi_1 generated by x - g.x over x in pi_1 and g in `mu1_image`.
Subgroup gamma_subgroup(const FinAbGroup& pi0, const FinAbGroup& pi1, const GroupAction& action,
                        const std::vector<GroupElement>& mu1_image);

// Canonical (lexicographically least) representatives of
// (pi_1 / Gamma) / pi_0, sorted. Throws ActionNotDescending if the action
// does not preserve Gamma.
std::vector<GroupElement> classify_bundles(const FinAbGroup& pi0, const FinAbGroup& pi1,
                                           const GroupAction& action,
                                           const std::vector<GroupElement>& mu1_image);

// pi_0, pi_1 and adjoint action for PO(n), n even >= 4. pi_1 is generated by
// the kernel elements -1 and omega_n (Z2 x Z2) when n = 0 mod 4, and by
// omega_n alone (Z4, -1 = 2 omega_n) when n = 2 mod 4.
struct PoGroupData {
  FinAbGroup pi0;
  FinAbGroup pi1;
  GroupAction action;
};

PoGroupData po_group_data(int n);

// Kernel element of Pin(n) -> PO(n) corresponding to an element of pi_1 PO(n).
KernelElement po_kernel_element(int n, const GroupElement& x);

// ---------------------------------------------------------------------------
// PO(n) invariant classes, lifting and component counts
// ---------------------------------------------------------------------------

// Largest genus accepted by routines that enumerate all 2^{2g} values of mu1.
inline constexpr int kMaxEnumerationGenus = 10;

// Every admissible (mu1, mu2) for genus g: first the three mu1 = 0 classes,
// then the nonzero mu1 in bit-string order, each with Zero then Omega.
// Throws BadInput unless 2 <= g <= kMaxEnumerationGenus and n is even and >= 4.
std::vector<InvariantClass> invariant_classes(int genus, int n);

enum class LiftTarget { SOn, Spinn, Pinn, On };

const char* to_string(LiftTarget t);

// Whether a PO(n)-bundle of the given class lifts to the target group.
// SO/Spin queries require mu1 == 0 (TargetInvalidForClass otherwise);
// throws InvalidClass for an inadmissible class.
bool lifts_to(const InvariantClass& cls, LiftTarget target);

// (g - 1) n^2 / 4 mod 2. Throws BadInput for odd n.
int z0(int n, int genus);

// Connected components of the PGL(n,R) representation variety (n >= 2,
// 2 <= g <= 31 so the count fits in 64 bits).
std::uint64_t component_count(int n, int genus);

// 2 for the class (0, mu2) whose w2 value is z0, 1 otherwise.
int components_per_class(const InvariantClass& cls, int n, int genus);

struct ComponentReport {
  struct Entry {
    InvariantClass cls;
    int multiplicity;
  };
  std::vector<Entry> entries;
  std::uint64_t total = 0;
};

ComponentReport component_report(int n, int genus);

// ---------------------------------------------------------------------------
// Twisted orthogonal (EGL(n,R)) side
// ---------------------------------------------------------------------------

// Invariants (mu1bar, mu2bar) of a twisted orthogonal bundle (V, L, Q):
// w2 is present exactly when mu1bar = 0 and deg L is even.
struct TwistedClass {
  Z2Vector mu1bar;
  std::optional<int> w2;
  std::int64_t degree = 0;

  bool valid() const;
  friend bool operator==(const TwistedClass&, const TwistedClass&) = default;
};

std::string to_string(const TwistedClass& c);

// Throws InvalidClass for a malformed payload.
InvariantClass project_twisted(const TwistedClass& cls);

struct EglComponentReport {
  struct Entry {
    TwistedClass cls;
    int total_multiplicity;  // components of M_d with this class
    std::uint64_t fibre_multiplicity;  // components of the fixed-L fibre M_{L,d}
  };
  int degree = 0;
  std::vector<Entry> entries;
  std::uint64_t total = 0;
  std::uint64_t fibre_total = 0;
};

// degree 0 or 1; throws BadInput otherwise or for invalid (g, n).
EglComponentReport egl_component_counts(int degree, int genus, int n);

struct StiefelWhitney {
  Z2Vector w1;
  int w2;
  friend bool operator==(const StiefelWhitney&, const StiefelWhitney&) = default;
};

// (w1, w2) of W tensor F for a rank-n bundle W (n even) and line bundle F
// with w1(F) = f1: w1 is unchanged and w2 picks up <w1, f1>.
StiefelWhitney tensor_by_line_bundle(const Z2Vector& w1, int w2, const Z2Vector& f1, int n);

// Complex dimension of the moduli space of GL(n,C)-Higgs bundles.
std::int64_t moduli_dimension(int n, int genus);

}  // namespace pglrep
