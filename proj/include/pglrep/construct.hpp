#pragma once

#include <utility>

#include "pglrep/linalg.hpp"
#include "pglrep/surfrep.hpp"

namespace pglrep {

// Named orthogonal matrices built from 2x2 seeds by block recursion.
enum class CatalogueName { X, XPrime, Y, YPrime, Z, W, WPrime };

const char* to_string(CatalogueName name);

// Throws BadDimension unless n is even and >= 2 (>= 4 for W, W').
RatMatrix catalogue_matrix(CatalogueName name, int n);

enum class PairKind { Commuting, Anticommuting };

struct PairSpec {
  PairKind kind;
  OrthComponent first;
  OrthComponent second;
};

// Pair with the requested components and commutator +I (Commuting) or -I
// (Anticommuting). Throws BadDimension unless n is even and >= 4.
std::pair<RatMatrix, RatMatrix> pair_for(const PairSpec& spec, int n);

// A representation realizing `target`, checked against invariants() before
// it is returned. Throws InvalidClass, BadInput, BadDimension.
SurfaceRep build_representation(int genus, int n, const InvariantClass& target);

}  // namespace pglrep
