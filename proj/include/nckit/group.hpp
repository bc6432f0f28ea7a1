#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace nckit {

/// Group element payload. Zn: coordinate vector of fixed rank. Free group:
/// reduced word of signed letters (+k / -k for generator k, 1-based).
/// Finite: a single table index.
using GroupElem = std::vector<long>;

/// Finite group given by its full multiplication table.
struct FiniteGroup {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int id = 0;

    int size() const { return static_cast<int>(names.size()); }
    /// Identity/inverse laws everywhere; associativity fully for order <= 64,
    /// sampled above. Throws on violation.
    void validate() const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);  // n <= 5
    static FiniteGroup from_json(const nlohmann::ordered_json& j);
    nlohmann::ordered_json to_json() const;
};

class GroupOracle {
public:
    enum class Kind { Zn, Free, Finite };

    static GroupOracle zn(int rank);
    static GroupOracle free_group(int rank);
    static GroupOracle finite(FiniteGroup g);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    const FiniteGroup& table() const { return finite_; }

    GroupElem identity() const;
    GroupElem multiply(const GroupElem& a, const GroupElem& b) const;
    GroupElem inverse(const GroupElem& a) const;
    bool is_identity(const GroupElem& a) const { return a == identity(); }

    std::string to_string(const GroupElem& a) const;
    GroupElem parse(const std::string& s) const;

    /// All elements if finite; throws otherwise.
    std::vector<GroupElem> all_elements() const;

    /// Default generating set for word-metric balls: standard basis (Zn),
    /// letters (free), or the whole group (finite).
    std::vector<GroupElem> default_generators() const;

private:
    Kind kind_ = Kind::Finite;
    int rank_ = 0;
    FiniteGroup finite_;
};

/// Finite symmetric subset of the group, canonicalized so that F = F^{-1}
/// and the identity belongs to F.
class GammaSubset {
public:
    GammaSubset() = default;
    GammaSubset(const GroupOracle& g, std::vector<GroupElem> elems);

    const std::set<GroupElem>& elements() const { return elems_; }
    bool contains(const GroupElem& e) const { return elems_.count(e) > 0; }
    size_t size() const { return elems_.size(); }

private:
    std::set<GroupElem> elems_;
};

/// Set of all products of exactly n elements of F (contains F since 1 in F).
GammaSubset powers(const GroupOracle& g, const GammaSubset& f, int n);

/// Finite window of group elements: an explicit list or a word-metric ball.
struct WindowSpec {
    std::vector<GroupElem> explicit_elems;  // used when radius < 0
    int radius = -1;
    std::vector<GroupElem> ball_generators;  // defaults to oracle generators

    std::vector<GroupElem> materialize(const GroupOracle& g) const;
};

struct OrbitInfo {
    std::vector<std::vector<size_t>> orbits;  // indices into the input list
    std::vector<size_t> representatives;
    std::vector<long> stabilizer_sizes;
};

}  // namespace nckit
