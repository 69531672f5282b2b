// Nondegeneracy of face parts: layered sound certificates, an exact
// monomial-curve witness search, and Unknown when neither side decides.
#pragma once

#include "nc/curves.hpp"
#include "nc/mixedpoly.hpp"
#include "nc/polyhedron.hpp"
#include "nc/verdict.hpp"

namespace nc {

struct SearchOptions {
  std::int64_t max_exponent = 12;  // per-component bound on determining vectors
  int grid = 1;                    // 0 small, 1 default, 2 wide
  bool assert_psh = false;         // user-supplied plurisubharmonicity
  int threads = 1;
  bool float_refine = true;        // float proposes, exact arithmetic decides
};

// Verdict for a single bounded face (full or embedded in a coordinate plane).
NondegeneracyVerdict check_face(const MixedPolynomial& f, const LatticePolyhedron& P,
                                const FaceHandle& face, const SearchOptions& opts = {});

// Conjunction over every bounded face of N+(f); the first Degenerate face
// short-circuits, any Unknown downgrades the overall status.
NondegeneracyVerdict check_all(const MixedPolynomial& f, const SearchOptions& opts = {});

// Gradient-of-face-part torus-zero search for purely holomorphic input;
// sound when a zero is found, inconclusive otherwise.
struct KouchnirenkoFace {
  FaceHandle face;
  bool zero_found = false;
  std::vector<GaussianRational> zero;
  bool certified_nonvanishing = false;
};
struct KouchnirenkoReport {
  std::vector<KouchnirenkoFace> faces;
  bool any_degenerate = false;
};
KouchnirenkoReport kouchnirenko_check(const MixedPolynomial& f, const SearchOptions& opts = {});

// For a face inside a coordinate plane, checks that the verdict agrees with
// the verdict on the restricted polynomial (Unknown excluded).
struct RestrictionAgreement {
  NdStatus full;
  NdStatus restricted;
  bool agree;  // true when equal or either side Unknown
};
RestrictionAgreement restricted_equivalence(const MixedPolynomial& f, const FaceHandle& face,
                                            const SearchOptions& opts = {});

// d/dz_j of a purely holomorphic polynomial.
MixedPolynomial holomorphic_derivative(const MixedPolynomial& f, size_t j);

// The coefficient grid used by the witness search, exposed for tests.
std::vector<GaussianRational> coefficient_palette(int grid);

}  // namespace nc
