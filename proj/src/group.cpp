#include "nckit/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace nckit {

void FiniteGroup::validate() const {
    int n = size();
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty");
    if (static_cast<int>(mul.size()) != n || static_cast<int>(inv.size()) != n)
        throw std::invalid_argument("FiniteGroup: table size mismatch");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("FiniteGroup: ragged table");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("FiniteGroup: index out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (mul[id][a] != a || mul[a][id] != a)
            throw std::invalid_argument("FiniteGroup: identity law fails");
        if (mul[a][inv[a]] != id || mul[inv[a]][a] != id)
            throw std::invalid_argument("FiniteGroup: inverse law fails");
    }
    auto check_assoc = [&](int a, int b, int c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw std::invalid_argument("FiniteGroup: associativity fails");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int k = 0; k < 20000; ++k) check_assoc(d(rng), d(rng), d(rng));
    }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n < 1");
    FiniteGroup g;
    for (int i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    g.id = 0;
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric: supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    FiniteGroup g;
    int m = static_cast<int>(perms.size());
    for (const auto& q : perms) {
        std::string name = "(";
        for (int i = 0; i < n; ++i) name += std::to_string(q[i] + 1);
        g.names.push_back(name + ")");
    }
    g.mul.assign(m, std::vector<int>(m));
    g.inv.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        std::vector<int> ia(n);
        for (int i = 0; i < n; ++i) ia[perms[a][i]] = i;
        g.inv[a] = index_of(ia);
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            g.mul[a][b] = index_of(c);
        }
    }
    g.id = index_of([&] { std::vector<int> e(n); for (int i = 0; i < n; ++i) e[i] = i; return e; }());
    return g;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::ordered_json& j) {
    FiniteGroup g;
    for (const auto& e : j.at("elements")) g.names.push_back(e.get<std::string>());
    for (const auto& row : j.at("mul")) g.mul.push_back(row.get<std::vector<int>>());
    g.inv = j.at("inv").get<std::vector<int>>();
    g.id = j.at("id").get<int>();
    g.validate();
    return g;
}

nlohmann::ordered_json FiniteGroup::to_json() const {
    nlohmann::ordered_json j;
    j["elements"] = names;
    j["mul"] = mul;
    j["inv"] = inv;
    j["id"] = id;
    return j;
}

GroupOracle GroupOracle::zn(int rank) {
    if (rank < 1) throw std::invalid_argument("zn: rank < 1");
    GroupOracle g;
    g.kind_ = Kind::Zn;
    g.rank_ = rank;
    return g;
}

GroupOracle GroupOracle::free_group(int rank) {
    if (rank < 1 || rank > 26) throw std::invalid_argument("free_group: rank must be 1..26");
    GroupOracle g;
    g.kind_ = Kind::Free;
    g.rank_ = rank;
    return g;
}

GroupOracle GroupOracle::finite(FiniteGroup fg) {
    fg.validate();
    GroupOracle g;
    g.kind_ = Kind::Finite;
    g.finite_ = std::move(fg);
    return g;
}

GroupElem GroupOracle::identity() const {
    switch (kind_) {
        case Kind::Zn: return GroupElem(rank_, 0);
        case Kind::Free: return {};
        case Kind::Finite: return {finite_.id};
    }
    return {};
}

GroupElem GroupOracle::multiply(const GroupElem& a, const GroupElem& b) const {
    switch (kind_) {
        case Kind::Zn: {
            GroupElem c(rank_);
            for (int i = 0; i < rank_; ++i) c[i] = a[i] + b[i];
            return c;
        }
        case Kind::Free: {
            GroupElem c = a;
            for (long x : b) {
                if (!c.empty() && c.back() == -x) c.pop_back();
                else c.push_back(x);
            }
            return c;
        }
        case Kind::Finite:
            return {finite_.mul[a.at(0)][b.at(0)]};
    }
    return {};
}

GroupElem GroupOracle::inverse(const GroupElem& a) const {
    switch (kind_) {
        case Kind::Zn: {
            GroupElem c(rank_);
            for (int i = 0; i < rank_; ++i) c[i] = -a[i];
            return c;
        }
        case Kind::Free: {
            GroupElem c(a.rbegin(), a.rend());
            for (long& x : c) x = -x;
            return c;
        }
        case Kind::Finite:
            return {finite_.inv[a.at(0)]};
    }
    return {};
}

std::string GroupOracle::to_string(const GroupElem& a) const {
    switch (kind_) {
        case Kind::Zn: {
            if (rank_ == 1) return std::to_string(a[0]);
            std::string s = "(";
            for (int i = 0; i < rank_; ++i) {
                if (i) s += ",";
                s += std::to_string(a[i]);
            }
            return s + ")";
        }
        case Kind::Free: {
            if (a.empty()) return "e";
            std::string s;
            for (long x : a) s += static_cast<char>((x > 0 ? 'a' : 'A') + std::abs(x) - 1);
            return s;
        }
        case Kind::Finite:
            return finite_.names[a.at(0)];
    }
    return "?";
}

GroupElem GroupOracle::parse(const std::string& s) const {
    switch (kind_) {
        case Kind::Zn: {
            std::string body = s;
            if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
            GroupElem c;
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
                c.push_back(std::stol(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (static_cast<int>(c.size()) != rank_)
                throw std::invalid_argument("parse: wrong coordinate count in '" + s + "'");
            return c;
        }
        case Kind::Free: {
            if (s == "e" || s == "1") return {};
            GroupElem w;
            for (char ch : s) {
                long x;
                if (ch >= 'a' && ch < 'a' + rank_) x = ch - 'a' + 1;
                else if (ch >= 'A' && ch < 'A' + rank_) x = -(ch - 'A' + 1);
                else throw std::invalid_argument(std::string("parse: bad letter '") + ch + "'");
                if (!w.empty() && w.back() == -x) w.pop_back();
                else w.push_back(x);
            }
            return w;
        }
        case Kind::Finite: {
            for (int i = 0; i < finite_.size(); ++i)
                if (finite_.names[i] == s) return {i};
            throw std::invalid_argument("parse: unknown element '" + s + "'");
        }
    }
    return {};
}

std::vector<GroupElem> GroupOracle::all_elements() const {
    if (kind_ != Kind::Finite) throw std::logic_error("all_elements: infinite group");
    std::vector<GroupElem> out;
    for (int i = 0; i < finite_.size(); ++i) out.push_back({i});
    return out;
}

std::vector<GroupElem> GroupOracle::default_generators() const {
    std::vector<GroupElem> gens;
    switch (kind_) {
        case Kind::Zn:
            for (int i = 0; i < rank_; ++i) {
                GroupElem e(rank_, 0);
                e[i] = 1;
                gens.push_back(e);
                e[i] = -1;
                gens.push_back(e);
            }
            break;
        case Kind::Free:
            for (long i = 1; i <= rank_; ++i) {
                gens.push_back({i});
                gens.push_back({-i});
            }
            break;
        case Kind::Finite:
            return all_elements();
    }
    return gens;
}

GammaSubset::GammaSubset(const GroupOracle& g, std::vector<GroupElem> elems) {
    for (const auto& e : elems) {
        elems_.insert(e);
        elems_.insert(g.inverse(e));
    }
    elems_.insert(g.identity());
}

GammaSubset powers(const GroupOracle& g, const GammaSubset& f, int n) {
    if (n < 1) throw std::invalid_argument("powers: n < 1");
    std::set<GroupElem> cur = f.elements();
    for (int k = 1; k < n; ++k) {
        std::set<GroupElem> next;
        for (const auto& a : cur)
            for (const auto& b : f.elements()) next.insert(g.multiply(a, b));
        cur = std::move(next);
    }
    return GammaSubset(g, std::vector<GroupElem>(cur.begin(), cur.end()));
}

std::vector<GroupElem> WindowSpec::materialize(const GroupOracle& g) const {
    if (radius < 0) {
        if (explicit_elems.empty()) throw std::invalid_argument("window: empty");
        std::set<GroupElem> s(explicit_elems.begin(), explicit_elems.end());
        return {s.begin(), s.end()};
    }
    std::vector<GroupElem> gens = ball_generators.empty() ? g.default_generators() : ball_generators;
    std::set<GroupElem> seen{g.identity()};
    std::deque<std::pair<GroupElem, int>> queue{{g.identity(), 0}};
    while (!queue.empty()) {
        auto [e, d] = queue.front();
        queue.pop_front();
        if (d == radius) continue;
        for (const auto& s : gens) {
            GroupElem f = g.multiply(e, s);
            if (seen.insert(f).second) queue.emplace_back(f, d + 1);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace nckit
