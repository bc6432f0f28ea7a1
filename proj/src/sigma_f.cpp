#include "nckit/sigma_f.hpp"

#include <algorithm>
#include <stdexcept>

#include "nckit/cliques.hpp"

namespace nckit {

SigmaFWindow build_sigma_F(const GroupOracle& g, const GammaSubset& f, const WindowSpec& w) {
    SigmaFWindow out;
    out.group = g;
    out.f = f;
    out.window = w.materialize(g);
    int n = static_cast<int>(out.window.size());
    if (n == 0) throw std::invalid_argument("build_sigma_F: empty window");

    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GroupElem q = g.multiply(g.inverse(out.window[i]), out.window[j]);
            if (f.contains(q)) adj[i][j] = adj[j][i] = true;
        }

    std::vector<Simplex> facets;
    for (const auto& clique : max_cliques(adj)) {
        std::vector<VertexId> verts;
        for (int i : clique) verts.emplace_back(g.to_string(out.window[i]));
        facets.emplace_back(std::move(verts));
    }
    out.complex = SimplicialComplex::from_maximal(std::move(facets));
    for (const auto& e : out.window) out.vertex_to_elem[out.label_of(e)] = e;
    return out;
}

PresentationPtr E_F_presentation(const SigmaFWindow& w, Variant variant) {
    return presentation_of(w.complex, variant);
}

Simplex act(const SigmaFWindow& w, const GroupElem& s, const Simplex& simplex) {
    std::vector<VertexId> verts;
    for (const auto& v : simplex.vertices()) {
        auto it = w.vertex_to_elem.find(v);
        if (it == w.vertex_to_elem.end())
            throw std::invalid_argument("act: vertex " + v.to_string() + " not in the window");
        GroupElem moved = w.group.multiply(s, it->second);
        VertexId lv = w.label_of(moved);
        if (!w.vertex_to_elem.count(lv))
            throw std::out_of_range("act: translate " + lv.to_string() + " leaves the window");
        verts.push_back(lv);
    }
    return Simplex(std::move(verts));
}

OrbitInfo orbits(const SigmaFWindow& w, const std::vector<Simplex>& simplexes) {
    if (w.group.kind() != GroupOracle::Kind::Finite)
        throw std::invalid_argument("orbits: finite groups only");
    long order = w.group.table().size();
    std::map<Simplex, size_t> index;
    for (size_t i = 0; i < simplexes.size(); ++i) index[simplexes[i]] = i;

    OrbitInfo info;
    std::vector<bool> seen(simplexes.size(), false);
    for (size_t i = 0; i < simplexes.size(); ++i) {
        if (seen[i]) continue;
        std::set<size_t> orbit;
        long stab = 0;
        for (const auto& s : w.group.all_elements()) {
            Simplex moved = act(w, s, simplexes[i]);
            auto it = index.find(moved);
            if (it == index.end())
                throw std::invalid_argument("orbits: orbit leaves the given simplex list");
            orbit.insert(it->second);
            if (moved == simplexes[i]) ++stab;
        }
        for (size_t j : orbit) seen[j] = true;
        info.orbits.emplace_back(orbit.begin(), orbit.end());
        info.representatives.push_back(i);
        info.stabilizer_sizes.push_back(stab);
        if (static_cast<long>(orbit.size()) * stab != order)
            throw std::logic_error("orbits: orbit-stabilizer count mismatch");
    }
    return info;
}

WalkCheck word_walk_check(const GroupOracle& g, const GammaSubset& f,
                          const std::vector<GroupElem>& word) {
    if (word.size() < 2) throw std::invalid_argument("word_walk_check: need at least s and t");
    WalkCheck c;

    // Flag rewriting: the word vanishes iff some adjacent distinct pair is a
    // non-edge, i.e. its quotient is outside F.
    c.rewrite_zero = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == word[i + 1]) continue;
        GroupElem q = g.multiply(g.inverse(word[i]), word[i + 1]);
        if (!f.contains(q)) c.rewrite_zero = true;
    }

    // Walk oracle: each step of the given letter sequence must be an F-step
    // (a repeated letter is a lazy step, allowed since 1 is in F).
    c.walk_exists = true;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        GroupElem q = g.multiply(g.inverse(word[i]), word[i + 1]);
        if (!f.contains(q)) c.walk_exists = false;
    }

    int n = static_cast<int>(word.size()) - 1;
    GroupElem st = g.multiply(g.inverse(word.front()), word.back());
    c.endpoint_in_Fn = powers(g, f, n).contains(st);

    c.consistent = (c.rewrite_zero == !c.walk_exists) && (!c.walk_exists || c.endpoint_in_Fn);
    return c;
}

std::vector<GroupElem> graded_support(const std::map<GroupElem, Eigen::MatrixXcd>& family,
                                      double eps) {
    std::vector<GroupElem> out;
    for (const auto& [s, m] : family)
        if (m.operatorNorm() > eps) out.push_back(s);
    return out;
}

}  // namespace nckit
