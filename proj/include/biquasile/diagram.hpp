#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biquasile/algebra.hpp"

namespace bq {

enum class VertexKind { PositiveCrossing, NegativeCrossing, MarkedVertex };

// Regions around a vertex in the fixed order (x, a, b, y) so that the
// crossing rule reads y = x*(a.b). Indices may coincide.
struct Vertex {
    VertexKind kind;
    int x, a, b, y;
    bool operator==(const Vertex&) const = default;
};

struct MarkedGraphDiagram {
    int region_count = 0;
    std::vector<Vertex> vertices;
    std::string name;
    std::optional<int> components;     // declared split-component count
    std::vector<int> free_regions;     // regions touched by no vertex (closed curves)

    bool classical() const;            // no marked vertices
};

// Line format: "regions n", then optional "name <label>", "components k",
// "free_regions i j ...", then one "<TAG> x a b y" line per vertex with
// TAG in {X+, X-, M}. '#' starts a comment.
MarkedGraphDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const MarkedGraphDiagram& d);

// One coloring condition. StarDot: z = u*(v.w); DotStar: z = u.(v*w);
// Equal: u = z (v, w unused).
enum class EquationShape { StarDot, DotStar, Equal };
struct Equation {
    EquationShape shape;
    int u, v, w, z;
    int vertex; // index into d.vertices
};

// Candidate readings of the marked-vertex coloring rule, kept behind one
// switch so the convention lives in a single place.
//   Merge:      x = y and a = b (resolution-merged pairs agree)
//   Reciprocal: y = x*(a.b) and x = y*(a.b)
//   Dual:       y = x.(a*b) and b = a*(y.x)   (shipped default)
enum class MarkedSchema { Merge, Reciprocal, Dual };
inline constexpr MarkedSchema kDefaultSchema = MarkedSchema::Dual;

// Crossings contribute y = x*(a.b) regardless of sign; marked vertices follow
// the schema. The biquasile argument is validated for compatibility only.
std::vector<Equation> constraints(const MarkedGraphDiagram& d, const Biquasile& X,
                                  MarkedSchema schema = kDefaultSchema);

// Removes marked vertices, merging (a,b) for sign +1 and (x,y) for sign -1
// via union-find, then re-indexes regions densely in ascending order of the
// surviving representatives.
MarkedGraphDiagram resolve(const MarkedGraphDiagram& d, int sign);

// Warnings when region_count deviates from V + 1 + k.
std::vector<std::string> euler_check(const MarkedGraphDiagram& d);

} // namespace bq
