#include "nckit/presentation.hpp"

#include <algorithm>
#include <set>

namespace nckit {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Full: return "full";
        case Variant::Flag: return "flag";
        case Variant::Abelian: return "abelian";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    if (s == "full" || s == "s") return Variant::Full;
    if (s == "flag") return Variant::Flag;
    if (s == "abelian" || s == "ab") return Variant::Abelian;
    throw std::invalid_argument("unknown variant: " + s);
}

AlgebraPresentation::AlgebraPresentation(SimplicialComplex complex, Variant variant)
    : complex_(std::move(complex)), variant_(variant) {
    effective_ = (variant_ == Variant::Flag) ? complex_.flag_saturation() : complex_;
    gens_ = complex_.vertices();
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) index_[gens_[i]] = i;
}

int AlgebraPresentation::gen_index(const VertexId& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

bool AlgebraPresentation::is_simplex_indices(const std::vector<int>& distinct_sorted) const {
    if (distinct_sorted.empty()) return true;
    std::vector<VertexId> vs;
    vs.reserve(distinct_sorted.size());
    for (int i : distinct_sorted) vs.push_back(gens_[i]);
    return effective_.contains(Simplex(std::move(vs)));
}

bool AlgebraPresentation::has_edge_indices(int i, int j) const {
    if (i == j) return true;
    return effective_.has_edge(gens_[i], gens_[j]);
}

bool AlgebraPresentation::forced_zero(const Monomial& w) const {
    if (w.empty()) return false;
    if (variant_ == Variant::Flag) {
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] != w[k + 1] && !has_edge_indices(w[k], w[k + 1])) return true;
        return false;
    }
    Monomial letters = w;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return !is_simplex_indices(letters);
}

const std::vector<std::vector<int>>& AlgebraPresentation::minimal_nonfaces() const {
    if (nonfaces_) return *nonfaces_;
    std::vector<std::vector<int>> result;
    int n = num_generators();
    int maxsize = std::min(n, effective_complex().dimension() + 2);
    // subsets of size 2..maxsize; a minimal non-face has all proper subsets
    // simplexes, so sizes beyond dim+2 cannot occur
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int want) -> void {
        if (static_cast<int>(idx.size()) == want) {
            if (is_simplex_indices(idx)) return;
            for (size_t drop = 0; drop < idx.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < idx.size(); ++i)
                    if (i != drop) sub.push_back(idx[i]);
                if (!is_simplex_indices(sub)) return;  // not minimal
            }
            result.push_back(idx);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            self(self, i + 1, want);
            idx.pop_back();
        }
    };
    for (int size = 2; size <= maxsize; ++size) rec(rec, 0, size);
    nonfaces_ = std::move(result);
    return *nonfaces_;
}

std::string AlgebraPresentation::monomial_str(const Monomial& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (int i : w) {
        if (!s.empty()) s += ".";
        s += "h[" + gens_[i].to_string() + "]";
    }
    return s;
}

PresentationPtr presentation_of(const SimplicialComplex& sigma, Variant variant) {
    return std::make_shared<AlgebraPresentation>(sigma, variant);
}

PresentationPtr scalar_presentation() {
    static PresentationPtr p = presentation_of(
        SimplicialComplex::from_maximal({Simplex({VertexId("pt")})}), Variant::Full);
    return p;
}

int skeleton_degree(const Monomial& w) {
    std::set<int> letters(w.begin(), w.end());
    return static_cast<int>(letters.size());
}

bool in_ideal(const AlgebraPresentation& p, const Monomial& w, int n) {
    return skeleton_degree(w) >= n + 1 || p.forced_zero(w);
}

bool in_J_delta(const Simplex& delta, const AlgebraPresentation& p, const Monomial& w) {
    std::set<VertexId> seen;
    for (int i : w) {
        const VertexId& v = p.gen_label(i);
        if (!delta.contains_vertex(v))
            throw std::invalid_argument("in_J_delta: letter outside the simplex");
        seen.insert(v);
    }
    return seen.size() == delta.size();
}

VanishVerdict monomial_vanishes(const AlgebraPresentation& p, const Monomial& w) {
    for (int i : w)
        if (i < 0 || i >= p.num_generators())
            throw std::invalid_argument("monomial_vanishes: unknown generator");
    VanishVerdict v;
    v.zero = p.forced_zero(w);
    if (!v.zero && p.variant() != Variant::Flag && !w.empty()) {
        // character certificate: uniform interior point of the letter-set simplex
        std::set<int> letters(w.begin(), w.end());
        RealizationPoint pt;
        for (int i : letters) pt.weights[p.gen_label(i)] = 1.0 / letters.size();
        v.certificate = pt;
    }
    return v;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::monomial(Monomial w, RatPoly c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_[std::move(w)] = std::move(c);
    return p;
}

void NCPoly::add_term(Monomial w, const RatPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Monomial w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(std::move(w), c1 * c2);
        }
    return r;
}

NCPoly NCPoly::operator*(const RatPoly& c) const {
    NCPoly r;
    for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
    return r;
}

NCPoly NCPoly::at(const Rational& t) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, RatPoly(c.eval(t)));
    return r;
}

std::string NCPoly::str(const AlgebraPresentation& p) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + p.monomial_str(w);
    }
    return s;
}

// ---------------------------------------------------------------------------
// normal form

namespace {

Monomial sorted_word(Monomial w) {
    std::sort(w.begin(), w.end());
    return w;
}

// one rewrite step of "sum over all generators of (s.w) with equal
// coefficients -> w"; returns true if something was rewritten
bool apply_sum_rule(std::map<Monomial, RatPoly>& terms, const AlgebraPresentation& target) {
    const int n = target.num_generators();
    const bool abelian = target.variant() == Variant::Abelian;

    auto try_group = [&](const Monomial& base, auto&& make_member) -> bool {
        const RatPoly* cref = nullptr;
        std::vector<std::map<Monomial, RatPoly>::iterator> members;
        for (int s = 0; s < n; ++s) {
            Monomial m = make_member(s, base);
            if (target.forced_zero(m)) continue;
            auto it = terms.find(m);
            if (it == terms.end()) return false;
            if (!cref) cref = &it->second;
            else if (it->second != *cref) return false;
            members.push_back(it);
        }
        if (!cref || members.empty()) return false;
        RatPoly c = *cref;
        for (auto it : members) terms.erase(it);
        auto [it2, inserted] = terms.try_emplace(base, c);
        if (!inserted) {
            it2->second += c;
            if (it2->second.is_zero()) terms.erase(it2);
        }
        return true;
    };

    auto prefix_member = [&](int s, const Monomial& w) {
        Monomial m;
        m.reserve(w.size() + 1);
        m.push_back(s);
        m.insert(m.end(), w.begin(), w.end());
        if (abelian) m = sorted_word(std::move(m));
        return m;
    };
    auto suffix_member = [](int s, const Monomial& w) {
        Monomial m = w;
        m.push_back(s);
        return m;
    };

    for (const auto& [w, c] : terms) {
        if (w.empty()) continue;
        if (abelian) {
            // remove any one occurrence of each distinct letter
            for (size_t k = 0; k < w.size(); ++k) {
                if (k > 0 && w[k] == w[k - 1]) continue;
                Monomial base;
                for (size_t i = 0; i < w.size(); ++i)
                    if (i != k) base.push_back(w[i]);
                if (try_group(base, prefix_member)) return true;
            }
        } else {
            Monomial head(w.begin() + 1, w.end());
            if (try_group(head, prefix_member)) return true;
            Monomial tail(w.begin(), w.end() - 1);
            if (try_group(tail, suffix_member)) return true;
        }
    }
    return false;
}

}  // namespace

NCPoly normal_form(const NCPoly& poly, const AlgebraPresentation& target) {
    std::map<Monomial, RatPoly> terms;
    const bool abelian = target.variant() == Variant::Abelian;
    for (const auto& [w, c] : poly.terms()) {
        Monomial m = abelian ? sorted_word(w) : w;
        if (target.forced_zero(m)) continue;
        auto [it, inserted] = terms.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    while (apply_sum_rule(terms, target)) {}
    NCPoly out;
    for (auto& [w, c] : terms) out += NCPoly::monomial(w, c);
    return out;
}

// ---------------------------------------------------------------------------
// assignment verification

GeneratorAssignment GeneratorAssignment::at(const Rational& t) const {
    GeneratorAssignment a;
    a.source = source;
    a.target = target;
    for (const auto& img : images) a.images.push_back(img.at(t));
    return a;
}

bool GeneratorAssignment::same_images(const GeneratorAssignment& o) const {
    return images == o.images;
}

namespace {

NCPoly apply_word(const GeneratorAssignment& a, const Monomial& w) {
    NCPoly p = NCPoly::unit();
    for (int i : w) p = p * a.images[i];
    return p;
}

bool is_palindrome(const Monomial& w) {
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

// substitute the formal unit by the sum of all target generators, then
// require nonnegative coefficients on positive-shaped words
bool visibly_positive(const NCPoly& img, const AlgebraPresentation& target) {
    NCPoly p;
    for (const auto& [w, c] : img.terms()) {
        if (w.empty()) {
            for (int s = 0; s < target.num_generators(); ++s)
                p += NCPoly::monomial({s}, c);
        } else {
            p += NCPoly::monomial(w, c);
        }
    }
    for (const auto& [w, c] : p.terms()) {
        if (target.forced_zero(w)) continue;
        if (!c.nonneg_on_unit_interval()) return false;
        if (target.variant() != Variant::Abelian && !is_palindrome(w)) return false;
    }
    return true;
}

bool self_adjoint(const NCPoly& img) {
    for (const auto& [w, c] : img.terms()) {
        Monomial rev(w.rbegin(), w.rend());
        auto it = img.terms().find(rev);
        if (it == img.terms().end() || it->second != c) return false;
    }
    return true;
}

// letter-set closure for unit-free nonnegative "spread" images: if for
// every target facet D the set of source generators whose image support
// meets D is a source simplex, then every vanishing relation of the Full
// source holds after expansion, at any word length
bool full_variant_closure(const GeneratorAssignment& a) {
    const auto& src = *a.source;
    const auto& tgt = *a.target;
    std::vector<std::set<VertexId>> supports(src.num_generators());
    for (int g = 0; g < src.num_generators(); ++g) {
        for (const auto& [w, c] : a.images[g].terms()) {
            if (w.empty()) return false;  // unit term: no closure argument
            if (w.size() != 1) return false;
            if (!c.nonneg_on_unit_interval()) return false;
            supports[g].insert(tgt.gen_label(w[0]));
        }
    }
    for (const auto& facet : tgt.effective_complex().maximal_simplexes()) {
        std::vector<int> touched;
        for (int g = 0; g < src.num_generators(); ++g)
            for (const auto& v : supports[g])
                if (facet.contains_vertex(v)) {
                    touched.push_back(g);
                    break;
                }
        if (!src.is_simplex_indices(touched)) return false;
    }
    return true;
}

}  // namespace

VerifyResult verify_assignment(const GeneratorAssignment& a) {
    if (!a.source || !a.target) throw std::invalid_argument("verify_assignment: missing presentation");
    const auto& src = *a.source;
    const auto& tgt = *a.target;
    if (static_cast<int>(a.images.size()) != src.num_generators())
        throw std::invalid_argument("verify_assignment: mismatched generator sets");

    VerifyResult res;
    auto fail = [&](std::string rel, NCPoly residual) {
        res.verdict = Verdict::Failed;
        res.relation = std::move(rel);
        res.residual = std::move(residual);
        return res;
    };

    // self-adjointness of every image (generators are positive, hence h* = h)
    for (int g = 0; g < src.num_generators(); ++g) {
        if (!self_adjoint(a.images[g])) {
            res.verdict = Verdict::Undetermined;
            res.note = "image of h[" + src.gen_label(g).to_string() + "] is not visibly self-adjoint";
            return res;
        }
    }

    // unit relation (finite complexes are unital): sum of images = 1
    {
        NCPoly sum;
        for (const auto& img : a.images) sum += img;
        NCPoly residual = normal_form(sum - NCPoly::unit(), tgt);
        if (!residual.is_zero()) return fail("sum of generators = 1", residual);
    }

    // vanishing relations by source variant
    bool complete = true;
    switch (src.variant()) {
        case Variant::Flag: {
            for (int i = 0; i < src.num_generators(); ++i)
                for (int j = 0; j < src.num_generators(); ++j) {
                    if (i == j || src.has_edge_indices(i, j)) continue;
                    NCPoly r = normal_form(a.images[i] * a.images[j], tgt);
                    if (!r.is_zero())
                        return fail(src.monomial_str({i, j}) + " = 0", r);
                }
            break;  // pair relations are the whole family
        }
        case Variant::Abelian: {
            for (int i = 0; i < src.num_generators(); ++i)
                for (int j = i + 1; j < src.num_generators(); ++j) {
                    NCPoly r = normal_form(a.images[i] * a.images[j] - a.images[j] * a.images[i], tgt);
                    if (!r.is_zero())
                        return fail("commutator of h[" + src.gen_label(i).to_string() + "], h[" +
                                        src.gen_label(j).to_string() + "]",
                                    r);
                }
            for (const auto& nf : src.minimal_nonfaces()) {
                NCPoly r = normal_form(apply_word(a, nf), tgt);
                if (!r.is_zero()) return fail(src.monomial_str(nf) + " = 0", r);
            }
            break;  // commutativity reduces all longer words to these
        }
        case Variant::Full: {
            const auto& nonfaces = src.minimal_nonfaces();
            for (const auto& nf : nonfaces) {
                Monomial perm = nf;
                do {
                    NCPoly r = normal_form(apply_word(a, perm), tgt);
                    if (!r.is_zero()) return fail(src.monomial_str(perm) + " = 0", r);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            if (!nonfaces.empty() && !full_variant_closure(a)) complete = false;
            break;
        }
    }

    // visible positivity of every image
    for (int g = 0; g < src.num_generators(); ++g) {
        if (!visibly_positive(a.images[g], tgt)) {
            res.verdict = Verdict::Undetermined;
            res.note = "image of h[" + src.gen_label(g).to_string() +
                       "] is not visibly positive; route to a matrix representation";
            return res;
        }
    }

    if (!complete) {
        res.verdict = Verdict::Undetermined;
        res.note = "Full-variant vanishing relations beyond the checked words are not "
                   "decided by the two rewrite rules";
        return res;
    }
    res.verdict = Verdict::Verified;
    return res;
}

}  // namespace nckit
