#include "biquasile/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bq {

bool MarkedGraphDiagram::classical() const {
    return std::none_of(vertices.begin(), vertices.end(), [](const Vertex& v) {
        return v.kind == VertexKind::MarkedVertex;
    });
}

static void validate(const MarkedGraphDiagram& d) {
    if (d.region_count < 1) throw parse_error("region count must be positive");
    auto in_range = [&](int r) { return r >= 1 && r <= d.region_count; };
    for (int r : d.free_regions)
        if (!in_range(r))
            throw parse_error("free region " + std::to_string(r) + " out of range");
    std::set<int> touched(d.free_regions.begin(), d.free_regions.end());
    for (const Vertex& v : d.vertices)
        for (int r : {v.x, v.a, v.b, v.y}) touched.insert(r);
    for (int r = 1; r <= d.region_count; ++r)
        if (!touched.count(r))
            throw parse_error("region " + std::to_string(r) +
                              " appears in no vertex and is not declared free");
}

MarkedGraphDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    MarkedGraphDiagram d;
    bool have_regions = false;
    std::vector<int> vertex_lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "regions") {
            if (!(ls >> d.region_count) || d.region_count < 1)
                throw parse_error("bad region count", line_no);
            have_regions = true;
        } else if (tok == "name") {
            if (!(ls >> d.name)) throw parse_error("missing name", line_no);
        } else if (tok == "components") {
            int k;
            if (!(ls >> k) || k < 1) throw parse_error("bad component count", line_no);
            d.components = k;
        } else if (tok == "free_regions") {
            int r;
            while (ls >> r) d.free_regions.push_back(r);
            if (!ls.eof()) throw parse_error("bad free region index", line_no);
        } else if (tok == "X+" || tok == "X-" || tok == "M") {
            if (!have_regions) throw parse_error("missing 'regions n' header", line_no);
            Vertex v;
            v.kind = tok == "X+"  ? VertexKind::PositiveCrossing
                     : tok == "X-" ? VertexKind::NegativeCrossing
                                   : VertexKind::MarkedVertex;
            if (!(ls >> v.x >> v.a >> v.b >> v.y))
                throw parse_error("vertex needs four region indices", line_no);
            for (int r : {v.x, v.a, v.b, v.y})
                if (r < 1 || r > d.region_count)
                    throw parse_error("region index " + std::to_string(r) + " out of range 1.." +
                                          std::to_string(d.region_count),
                                      line_no);
            d.vertices.push_back(v);
            vertex_lines.push_back(line_no);
        } else {
            throw parse_error("unknown tag '" + tok + "'", line_no);
        }
    }
    if (!have_regions) throw parse_error("missing 'regions n' header");
    validate(d);
    return d;
}

std::string serialize_diagram(const MarkedGraphDiagram& d) {
    std::ostringstream out;
    out << "regions " << d.region_count << "\n";
    if (!d.name.empty()) out << "name " << d.name << "\n";
    if (d.components) out << "components " << *d.components << "\n";
    if (!d.free_regions.empty()) {
        out << "free_regions";
        for (int r : d.free_regions) out << ' ' << r;
        out << "\n";
    }
    for (const Vertex& v : d.vertices) {
        const char* tag = v.kind == VertexKind::PositiveCrossing  ? "X+"
                          : v.kind == VertexKind::NegativeCrossing ? "X-"
                                                                   : "M";
        out << tag << ' ' << v.x << ' ' << v.a << ' ' << v.b << ' ' << v.y << "\n";
    }
    return out.str();
}

std::vector<Equation> constraints(const MarkedGraphDiagram& d, const Biquasile& X,
                                  MarkedSchema schema) {
    if (X.order() < 1) throw domain_error("empty biquasile");
    std::vector<Equation> eqs;
    for (size_t i = 0; i < d.vertices.size(); ++i) {
        const Vertex& v = d.vertices[i];
        const int vi = (int)i;
        if (v.kind != VertexKind::MarkedVertex) {
            eqs.push_back({EquationShape::StarDot, v.x, v.a, v.b, v.y, vi});
            continue;
        }
        switch (schema) {
            case MarkedSchema::Merge:
                eqs.push_back({EquationShape::Equal, v.x, 0, 0, v.y, vi});
                eqs.push_back({EquationShape::Equal, v.a, 0, 0, v.b, vi});
                break;
            case MarkedSchema::Reciprocal:
                eqs.push_back({EquationShape::StarDot, v.x, v.a, v.b, v.y, vi});
                eqs.push_back({EquationShape::StarDot, v.y, v.a, v.b, v.x, vi});
                break;
            case MarkedSchema::Dual:
                eqs.push_back({EquationShape::DotStar, v.x, v.a, v.b, v.y, vi});
                eqs.push_back({EquationShape::StarDot, v.a, v.y, v.x, v.b, vi});
                break;
        }
    }
    return eqs;
}

MarkedGraphDiagram resolve(const MarkedGraphDiagram& d, int sign) {
    if (sign != 1 && sign != -1) throw domain_error("resolution sign must be +1 or -1");
    std::vector<int> parent(d.region_count + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Vertex& v : d.vertices)
        if (v.kind == VertexKind::MarkedVertex) {
            if (sign > 0)
                parent[find(v.a)] = find(v.b);
            else
                parent[find(v.x)] = find(v.y);
        }
    std::vector<int> remap(d.region_count + 1, 0);
    int next = 0;
    for (int r = 1; r <= d.region_count; ++r)
        if (find(r) == r) remap[r] = ++next;
    auto m = [&](int r) { return remap[find(r)]; };

    MarkedGraphDiagram out;
    out.region_count = next;
    out.name = d.name;
    out.components = std::nullopt; // component structure changes under smoothing
    for (const Vertex& v : d.vertices)
        if (v.kind != VertexKind::MarkedVertex)
            out.vertices.push_back({v.kind, m(v.x), m(v.a), m(v.b), m(v.y)});
    std::set<int> touched;
    for (const Vertex& v : out.vertices)
        for (int r : {v.x, v.a, v.b, v.y}) touched.insert(r);
    for (int r = 1; r <= out.region_count; ++r)
        if (!touched.count(r)) out.free_regions.push_back(r);
    return out;
}

std::vector<std::string> euler_check(const MarkedGraphDiagram& d) {
    std::vector<std::string> warnings;
    const int k = d.components.value_or(1);
    const int expected = (int)d.vertices.size() + 1 + k;
    if (d.region_count != expected)
        warnings.push_back("region count " + std::to_string(d.region_count) +
                           " differs from V + 1 + k = " + std::to_string(expected));
    return warnings;
}

} // namespace bq
