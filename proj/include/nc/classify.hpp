// Structural recognizers: single-facet quasihomogeneous models, rotation
// invariance, vertex positivity conditions, and the degree-4 normal form.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nc/hypersurface.hpp"
#include "nc/nondegen.hpp"

namespace nc {

struct PsVertexDetail {
  Exponents vertex;
  bool all_even = false;
  bool diagonal_positive = false;
  bool ok = false;
};

struct PsVertexReport {
  bool ok = false;
  std::vector<PsVertexDetail> details;
};

struct SemiregularReport {
  bool is_model = false;
  std::vector<std::int64_t> multitype;  // m_j per variable when is_model
  std::string note;
};

struct Type4Report {
  bool present = false;
  int m = 0;                 // number of degree-4 slots
  MixedPolynomial P;         // quartic block, over the degree-4 variables
  std::vector<size_t> four_slots, two_slots;
  std::string note;
};

struct ClassReport {
  SemiregularReport semiregular;
  bool rotation_invariant = false;
  PsVertexReport ps;
  bool ps_applicable = false;
  Type4Report type4;
};

// Diagram is a single simplex facet conv{m_j e_j} and F is certified
// nondegenerate.
SemiregularReport semiregular_model_check(const MixedPolynomial& f,
                                          const SearchOptions& opts = {});

// Every term has alpha == beta; equivalent to invariance under independent
// rotations of each coordinate.
bool rotation_invariance_check(const MixedPolynomial& f);

// Necessary vertex conditions for the positivity property: even vertices
// carrying a positive diagonal term.  Requires a pure-term-free principal
// part.
PsVertexReport ps_vertex_conditions(const MixedPolynomial& f);

// Recognizes the diagram conv{4e_1..4e_m, 2e_{m+1}..2e_n} and splits the
// principal part as quartic block plus positive Hermitian squares, applying
// an exact unitary diagonalization to the quadratic block when one exists.
Type4Report type4_structure(const MixedPolynomial& f, const SearchOptions& opts = {});

ClassReport classify_surface(const ModelHypersurface& m, const SearchOptions& opts = {});

}  // namespace nc
