// Newton polyhedra conv(S) + R^n_{>=0}: exact V/H representations, the full
// face lattice, determining normals and derived axis data.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nc/mixedpoly.hpp"
#include "nc/multiindex.hpp"
#include "nc/rational.hpp"

namespace nc {

struct FacetData {
  Exponents normal;    // primitive, componentwise >= 0
  std::int64_t level;  // <normal, xi> >= level on the polyhedron
  friend bool operator<(const FacetData& a, const FacetData& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.level < b.level;
  }
  friend bool operator==(const FacetData& a, const FacetData& b) {
    return a.normal == b.normal && a.level == b.level;
  }
};

// A face, either of the full polyhedron (index_set = all slots) or of a
// coordinate restriction embedded back into the ambient space.  bounded
// faces carry a determining normal that is strictly positive on index_set.
struct FaceHandle {
  size_t ambient = 0;
  IndexSet index_set = 0;
  std::vector<Exponents> vertex_list;  // lex sorted, ambient coordinates
  Exponents normal;                    // zero outside index_set
  std::int64_t level = 0;
  int dim = 0;
  bool bounded = false;
  IndexSet ray_mask = 0;  // recession directions of the face

  // Membership test for lattice points of the owning support.
  bool contains(const Exponents& xi) const {
    std::int64_t v = 0;
    for (size_t j = 0; j < ambient; ++j) {
      if (!nc::contains(index_set, j)) {
        if (xi[j] != 0) return false;
      } else {
        v += normal[j] * xi[j];
      }
    }
    return v == level;
  }

  bool same_face(const FaceHandle& o) const {
    return vertex_list == o.vertex_list && ray_mask == o.ray_mask && index_set == o.index_set;
  }
  bool is_vertex() const { return dim == 0; }
  std::string str() const;
};

using RhoVector = std::vector<ExtendedInt>;
using Direction = std::vector<ExtendedInt>;  // entries finite or infinity

class LatticePolyhedron {
 public:
  // Exact hull of support + nonnegative orthant.  Empty support gives the
  // flat polyhedron.
  static LatticePolyhedron build(const std::set<Exponents>& support, size_t n);

  bool flat() const { return flat_; }
  size_t ambient_dim() const { return n_; }
  const std::vector<Exponents>& support_points() const { return support_; }
  const std::vector<Exponents>& vertices() const { return vertices_; }
  const std::vector<FacetData>& facets() const { return facets_; }

  // All proper nonempty faces, every dimension, sorted by (dim, vertices).
  const std::vector<FaceHandle>& faces() const;
  std::vector<FaceHandle> bounded_faces() const;
  // Maximal bounded faces (the cells of the Newton diagram).
  std::vector<FaceHandle> diagram_faces() const;

  // True iff xi lies on some bounded face.
  bool on_diagram(const Exponents& xi) const;

  RhoVector rho() const;
  ExtendedInt rho1() const;
  bool convenient() const;
  // Variable order sorted by descending rho (stable); the convention used
  // in reports.
  std::vector<size_t> rho_order() const;

  // min <a, xi> over the polyhedron for a full direction with positive
  // entries, plus the face attaining it.
  std::pair<std::int64_t, FaceHandle> support_min(const Exponents& a) const;

  // Partial directions: infinite slots restrict to the coordinate plane of
  // the finite ones.  Returns l = infinity and no face when the restricted
  // support is empty.
  struct DirectionalData {
    ExtendedInt level;
    std::optional<FaceHandle> face;  // embedded into ambient coordinates
    IndexSet index_set = 0;
  };
  DirectionalData support_min_dir(const Direction& a_hat) const;

  struct DistanceData {
    ExtendedRat distance;
    std::vector<ExtendedRat> rho_dir;
  };
  DistanceData newton_distance(const Direction& a_hat) const;

  // True iff a (strictly positive, full-dimensional) determines exactly
  // this face.
  bool determines(const FaceHandle& face, const Exponents& a) const;

  // Bounded face with min normal component 1 among enumerated determining
  // vectors (exact for facets, where the normal is unique).
  bool regular_face(const FaceHandle& face) const;

  // The vertex rho_{j*} e_{j*} on the axis of the largest intercept.
  FaceHandle apex_vertex() const;

  std::optional<FaceHandle> find_face(const std::vector<Exponents>& vertex_list) const;

 private:
  size_t n_ = 0;
  bool flat_ = true;
  std::vector<Exponents> support_;
  std::vector<Exponents> vertices_;
  std::vector<FacetData> facets_;
  std::vector<FaceHandle> faces_;

  void enumerate_faces();
  FaceHandle make_face(std::uint64_t vmask, IndexSet rmask) const;
};

LatticePolyhedron newton_polyhedron(const MixedPolynomial& f);

// Terms with alpha+beta on the given bounded face.  Throws if the handle is
// not a bounded face of N+(f).
MixedPolynomial face_part(const MixedPolynomial& f, const FaceHandle& face);
// Same, trusting the handle (used for embedded faces of restrictions).
MixedPolynomial face_part_unchecked(const MixedPolynomial& f, const FaceHandle& face);

// Terms on the Newton diagram.
MixedPolynomial principal_part(const MixedPolynomial& f);

}  // namespace nc
