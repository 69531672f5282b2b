// Nondegeneracy verdicts shared by the checker, contact computations and
// the hypersurface pipeline.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nc/curves.hpp"
#include "nc/polyhedron.hpp"

namespace nc {

enum class NdStatus { Nondegenerate, Degenerate, Unknown };

inline std::string to_string(NdStatus s) {
  switch (s) {
    case NdStatus::Nondegenerate: return "nondegenerate";
    case NdStatus::Degenerate: return "degenerate";
    default: return "unknown";
  }
}

struct Witness {
  FaceHandle face;
  MonomialCurve curve;
};

struct FaceVerdict {
  FaceHandle face;
  NdStatus status = NdStatus::Unknown;
  std::string certificate;  // sound rule that fired, for Nondegenerate
  std::optional<MonomialCurve> witness;
  std::string note;
};

struct SearchStats {
  std::uint64_t directions_tried = 0;
  std::uint64_t points_tried = 0;
  std::uint64_t faces_checked = 0;
};

struct NondegeneracyVerdict {
  NdStatus status = NdStatus::Unknown;
  std::string certificate;
  std::optional<Witness> witness;
  std::vector<FaceVerdict> face_details;
  SearchStats stats;
};

}  // namespace nc
