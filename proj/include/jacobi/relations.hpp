#pragma once

#include <vector>

#include "jacobi/combination.hpp"
#include "jacobi/enumerate.hpp"

namespace jacobi {

enum class RelationKind { STU, IHX, FourT, Slide };

/// Let the skeleton leg `leg` hang from a trivalent vertex w with cyclic order
/// (stem, a, b). Returns the two-term chord side of STU,
///   D(b at p, a at p+1) - D(a at p, b at p+1),
/// where p is the rank of the leg. A loop at w gives zero.
Combination stu_expand(const Diagram& d, int leg);
Combination stu_relation(const Diagram& d, int leg);

/// IHX around the edge through half-edge h; both ends must be distinct
/// trivalent vertices.
Combination ihx_relation(const Diagram& d, HalfEdge h);

/// All STU, IHX or 4T relations in a degree (Slide needs a spec, see below).
/// Relations are built from every class, including those killed by AS.
std::vector<Combination> generate_relations(RelationKind kind, const Support& support, int degree,
                                            const EnumerateOptions& opts = {});

/// 4T relations among chord diagrams, obtained by expanding a tripod at each
/// of its three legs.
std::vector<Combination> four_t_relations(const Support& support, int degree);

/// A run of legs [begin, end) of a component, by rank in gamma1 (excluding v).
/// `whole` marks a circle lying entirely inside the region.
struct SkeletonSegment {
  int component = 0;
  int begin = 0;
  int end = 0;
  bool whole = false;
};

/// Data of a slide relation. `v` is the endpoint of beta on the arc alpha_1,
/// `beta` the half-edge of v that lies on beta. The bounded region holds the
/// listed vertices and skeleton segments; beta's other end lies outside.
struct SlideSpec {
  Diagram gamma1;
  int v = -1;
  HalfEdge beta = -1;
  std::vector<int> inside;
  std::vector<SkeletonSegment> segments;
};

/// Sum of the diagrams obtained by attaching beta to every arc crossing the
/// annulus, normalized so that gamma1 itself has coefficient +1.
/// Throws DomainError when the spec is inconsistent with the diagram.
Combination slide_relation(const SlideSpec& spec);

/// Rewrites a diagram without colors as an integral combination of chord
/// diagrams, always expanding at the least skeleton leg next to a trivalent
/// vertex.
Combination chordify(const Diagram& d);
Combination chordify(const Combination& x);

}  // namespace jacobi
