#include "zs/surface.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace zs {

MoebiusMap word_matrix(const Word& w, const std::vector<MoebiusMap>& gens) {
    MoebiusMap m;
    for (int letter : w) {
        int idx = std::abs(letter) - 1;
        m = m * (letter > 0 ? gens[idx] : gens[idx].inverse());
    }
    return m;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int letter : w) {
        char base = letter > 0 ? 'a' : 'A';
        s += static_cast<char>(base + std::abs(letter) - 1);
    }
    return s;
}

Word inverse_word(const Word& w) {
    Word inv(w.rbegin(), w.rend());
    for (int& x : inv) x = -x;
    return inv;
}

Word cyclically_reduce(const Word& w) {
    Word r;
    for (int letter : w) {
        if (!r.empty() && r.back() == -letter)
            r.pop_back();
        else
            r.push_back(letter);
    }
    while (r.size() >= 2 && r.front() == -r.back()) {
        r.erase(r.begin());
        r.pop_back();
    }
    return r;
}

Word least_rotation(const Word& w) {
    size_t n = w.size();
    if (n <= 1) return w;
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < n; ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

Word canonical_class(const Word& w) {
    Word r = cyclically_reduce(w);
    Word a = least_rotation(r);
    Word b = least_rotation(inverse_word(r));
    return std::min(a, b);
}

bool is_primitive(const Word& w) {
    size_t n = w.size();
    for (size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i)
            periodic = (w[i] == w[i % p]);
        if (periodic) return false;
    }
    return true;
}

bool for_each_cyclic_word(int g, int n, const std::function<bool(const Word&)>& visit) {
    Word w(n);
    // Depth-first over letters; letter values are {-g..-1, 1..g}.
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) return visit(w);
        for (int v = -g; v <= g; ++v) {
            if (v == 0) continue;
            if (pos > 0 && w[pos - 1] == -v) continue;
            if (pos == n - 1 && n > 1 && w[0] == -v) continue;
            w[pos] = v;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

SurfaceModel build_cylinder(double l) {
    if (!(l > 0.0) || !std::isfinite(l))
        throw InvalidLength("cylinder boundary length must be positive, got " +
                            std::to_string(l));
    SurfaceModel s;
    double e = std::exp(l / 2.0);
    s.generators = {MoebiusMap{e, 0.0, 0.0, 1.0 / e}};
    s.genus = 0;
    s.funnel_count = 2;
    s.boundary_lengths = {l, l};
    s.chi = 0;
    s.kind = "cylinder";
    return s;
}

SurfaceModel build_pants(const PantsSpec& p) {
    for (double l : {p.l1, p.l2, p.l3})
        if (!(l > 0.0) || !std::isfinite(l))
            throw InvalidLength("pants boundary lengths must be positive, got " +
                                std::to_string(l));
    // Trace-parameter solve: with a diagonal, tr b and tr(ab) fix b up to the
    // off-diagonal scaling, which det b = 1 then pins.
    double y = 2.0 * std::cosh(p.l2 / 2.0);
    double z = -2.0 * std::cosh(p.l3 / 2.0);
    double lam = std::exp(p.l1 / 2.0);
    MoebiusMap a{lam, 0.0, 0.0, 1.0 / lam};
    double bp = (z - y / lam) / (lam - 1.0 / lam);
    double bs = y - bp;
    // det = bp*bs - q*r with q = 1 forces r = bp*bs - 1.
    MoebiusMap b{bp, 1.0, bp * bs - 1.0, bs};
    SurfaceModel s;
    s.generators = {a, b};
    s.genus = 0;
    s.funnel_count = 3;
    s.boundary_lengths = {p.l1, p.l2, p.l3};
    s.chi = -1;
    s.kind = "pants";
    return s;
}

SurfaceModel build_from_generators(const std::vector<MoebiusMap>& gens, int genus,
                                   int funnels) {
    if (gens.empty()) throw InvalidInput("generator list is empty");
    if (genus < 0) throw InvalidInput("genus must be nonnegative");
    if (funnels < 1) throw InvalidInput("funnel count must be positive");
    SurfaceModel s;
    s.generators.reserve(gens.size());
    for (const MoebiusMap& g : gens) s.generators.push_back(normalized(g));
    s.genus = genus;
    s.funnel_count = funnels;
    s.chi = 2 - 2 * genus - funnels;
    s.kind = "generators";
    // Boundary lengths of user presentations are not derivable in general;
    // record the generator translation lengths as stand-ins, one per funnel
    // when counts match, else leave empty.
    if (static_cast<int>(gens.size()) == funnels)
        for (const MoebiusMap& g : s.generators)
            s.boundary_lengths.push_back(translation_length(g));
    return s;
}

ValidationReport validate_presentation(const SurfaceModel& s, int depth) {
    if (depth < 1) throw InvalidInput("validation depth must be >= 1");
    int g = static_cast<int>(s.generators.size());
    ValidationReport rep;
    rep.depth = depth;
    rep.min_translation_length = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= depth; ++n) {
        for_each_cyclic_word(g, n, [&](const Word& w) {
            MoebiusMap m = word_matrix(w, s.generators);
            if (!m.is_hyperbolic())
                throw NonHyperbolicElement("word " + word_to_string(w) +
                                           " has |trace| = " +
                                           std::to_string(std::abs(m.trace())) +
                                           " <= 2");
            double l = translation_length(m);
            if (l < rep.min_translation_length) {
                rep.min_translation_length = l;
                rep.shortest_word = w;
            }
            return true;
        });
    }
    rep.valid = true;
    return rep;
}

namespace {

double require_number(const nlohmann::json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number())
        throw InvalidInput("surface JSON: missing or non-numeric field \"" + field + "\"");
    return j[field].get<double>();
}

} // namespace

SurfaceModel surface_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("surface JSON parse error: ") + e.what());
    }
    if (!j.contains("kind") || !j["kind"].is_string())
        throw InvalidInput("surface JSON: missing string field \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "cylinder") {
        if (!j.contains("lengths") || !j["lengths"].is_array() || j["lengths"].size() != 1)
            throw InvalidInput("surface JSON: \"cylinder\" needs field \"lengths\" with 1 entry");
        return build_cylinder(j["lengths"][0].get<double>());
    }
    if (kind == "pants") {
        if (!j.contains("lengths") || !j["lengths"].is_array() || j["lengths"].size() != 3)
            throw InvalidInput("surface JSON: \"pants\" needs field \"lengths\" with 3 entries");
        return build_pants(PantsSpec{j["lengths"][0].get<double>(),
                                     j["lengths"][1].get<double>(),
                                     j["lengths"][2].get<double>()});
    }
    if (kind == "generators") {
        if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].empty())
            throw InvalidInput("surface JSON: \"generators\" needs nonempty field \"matrices\"");
        std::vector<MoebiusMap> gens;
        for (const auto& row : j["matrices"]) {
            if (!row.is_array() || row.size() != 4)
                throw InvalidInput("surface JSON: each entry of \"matrices\" must be [a,b,c,d]");
            gens.push_back({row[0].get<double>(), row[1].get<double>(),
                            row[2].get<double>(), row[3].get<double>()});
        }
        int genus = static_cast<int>(require_number(j, "genus"));
        int funnels = static_cast<int>(require_number(j, "funnels"));
        return build_from_generators(gens, genus, funnels);
    }
    throw InvalidInput("surface JSON: unknown kind \"" + kind + "\"");
}

SurfaceModel surface_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open surface file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return surface_from_json_text(ss.str());
}

} // namespace zs
