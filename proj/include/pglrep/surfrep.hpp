#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pglrep/linalg.hpp"
#include "pglrep/z2vector.hpp"

namespace pglrep {

// Representation of the genus-g surface group into PO(n), n even >= 4, given
// by one O(n) representative per generator, ordered A_1, B_1, ..., A_g, B_g.
// Construction validates orthogonality and the relation prod [A_i, B_i] = +-I.
class SurfaceRep {
 public:
  // Throws BadInput (genus < 2, wrong generator count), BadDimension
  // (n odd or < 4, mismatched sizes), NotOrthogonal, RelationViolated.
  SurfaceRep(int genus, std::vector<RatMatrix> generators);

  int genus() const { return genus_; }
  int dimension() const { return n_; }
  std::span<const RatMatrix> generators() const { return generators_; }
  // 1-based handle index.
  const RatMatrix& a(int handle) const { return generators_[2 * (handle - 1)]; }
  const RatMatrix& b(int handle) const { return generators_[2 * (handle - 1) + 1]; }

 private:
  int genus_;
  int n_;
  std::vector<RatMatrix> generators_;
};

// "A1", "B1", "A2", ... for a 0-based generator index.
std::string generator_label(int index);

enum class Delta2 { PlusI, MinusI };

enum class Mu2Value { Zero, One, Omega };

const char* to_string(Delta2 d);
const char* to_string(Mu2Value m);

// Topological class (mu1, mu2) of a PO(n)-bundle over the surface.
struct InvariantClass {
  Z2Vector mu1;
  Mu2Value mu2 = Mu2Value::Zero;

  // mu2 == One requires mu1 == 0.
  bool valid() const { return mu2 != Mu2Value::One || mu1.is_zero(); }

  friend bool operator==(const InvariantClass&, const InvariantClass&) = default;
  friend std::strong_ordering operator<=>(const InvariantClass& x, const InvariantClass& y);
};

std::string to_string(const InvariantClass& c);

// prod_i [A_i, B_i] for raw generator lists; throws RelationViolated if the
// product is not +-I. Generators must already be orthogonal and equally sized.
Delta2 check_relation(std::span<const RatMatrix> generators);
Delta2 check_relation(const SurfaceRep& rep);

// Bit k set iff generator k lies in O(n)^-.
Z2Vector delta1(const SurfaceRep& rep);
Delta2 delta2(const SurfaceRep& rep);

// Spin(n) obstruction for reps with delta1 == 0, with +-omega identified.
// Throws Delta1NotZero.
Mu2Value tilde_delta(const SurfaceRep& rep);

InvariantClass invariants(const SurfaceRep& rep);

}  // namespace pglrep
