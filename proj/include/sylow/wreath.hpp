#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/sym_char.hpp"

namespace sylow {

// A request outside the configured tower bound.
struct ScopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Irreducible character of the m-fold iterated wreath product, labelled
// recursively: either the extension of the p-th tensor power of a label
// one level down, multiplied by a power of the inflated top linear
// character, or the induction of a p-tuple of lower labels that are not
// all equal (tuples in one rotation orbit induce the same character; the
// stored tuple is the lexicographically minimal rotation).
struct IrrLabel {
    enum class Kind { extension, induced };
    Kind kind = Kind::extension;
    int inner = 0;
    int twist = 0;
    std::vector<int> tuple;
    int degree_exponent = 0;
    std::string to_string() const;
};

// Conjugacy class, also recursive: a rotation orbit of a p-tuple of lower
// classes (inside the base group), or a class of elements with a given
// nonzero top power, determined by the class of the cycle product.
struct ClassLabel {
    enum class Kind { base, twisted };
    Kind kind = Kind::base;
    std::vector<int> tuple;
    int product = 0;
    int top = 0;
    CycleType cycle_type;
    Bint size;
    std::string to_string() const;
};

struct WreathLevel {
    int p = 0;
    int level = 0;
    Bint group_order = 1;
    std::vector<IrrLabel> irr;
    std::vector<ClassLabel> classes;

    std::vector<int> extension_index;              // inner*p + twist -> index
    std::map<std::vector<int>, int> induced_index; // canonical tuple -> index
    std::map<std::vector<int>, int> base_index;    // canonical tuple -> index
    std::vector<int> twisted_offset;               // product*(p-1) + top-1 -> index

    std::vector<CycleType> type_reps;              // distinct class cycle types
    std::vector<int> class_type;                   // class -> index into type_reps
    int max_exponent = 0;

    int extension_at(int inner, int twist) const {
        return extension_index[size_t(inner) * size_t(p) + size_t(twist)];
    }
    int induced_at(const std::vector<int>& canonical) const;
    int twisted_at(int product, int top) const {
        return twisted_offset[size_t(product) * size_t(p - 1) + size_t(top - 1)];
    }
    std::vector<int> labels_of_degree(int k) const;
};

// Lexicographically minimal rotation; the canonical representative for
// induced labels and base classes.
std::vector<int> canonical_rotation(const std::vector<int>& tuple);

// The tower P_1 <= P_p <= P_{p^2} <= ... for one prime, built level by
// level.  Exact character values are available at every built level; the
// full value tables of levels <= 2 are cached since everything above is
// assembled from them.
class WreathTower {
  public:
    explicit WreathTower(int p, int max_level = -1);

    int p() const { return p_; }
    int max_level() const { return max_level_; }
    const WreathLevel& level(int m) const;

    // Exact value of character irr_idx at class class_idx, in the ambient
    // ring of the level.
    CycI value(int m, int irr_idx, int class_idx) const;

    // Value at a base class given by an (ordered) tuple of lower class
    // indices, expressed one ring down.
    CycI base_value(int m, int irr_idx, const std::vector<int>& tuple) const;

    // Cached full table, ambient ring; available while it stays small
    // (every level one below a buildable level qualifies).
    const std::vector<std::vector<CycI>>& table(int m) const;

    // agg[irr][t] = sum over classes of cycle type t of size * conj(value);
    // the direct decomposition only needs these aggregates.
    const std::vector<std::vector<CycI>>& aggregates(int m) const;

    static int default_bound(int p);

  private:
    void build_level(int m);

    int p_;
    int max_level_;
    std::vector<WreathLevel> levels_;
    mutable std::vector<std::vector<std::vector<CycI>>> tables_;
    mutable std::vector<std::vector<std::vector<CycI>>> aggregates_;
    mutable std::recursive_mutex mutex_;
};

// Everything verify runs on one level: counting, class equation, degrees,
// the regular character, and first orthogonality over all label pairs.
struct TableCheck {
    int p = 0;
    int level = 0;
    size_t label_count = 0;
    size_t class_count = 0;
    bool counts_match = false;
    bool degree_square_sum_ok = false;
    bool class_equation_ok = false;
    bool identity_column_ok = false;
    bool exponent_interval_ok = false;  // odd p only; true when skipped
    bool regular_character_ok = false;
    bool lower_gram_ok = false;
    bool gram_ok = false;
    bool sampled_gram_ok = false;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

TableCheck verify_table(const WreathTower& tower, int m,
                        unsigned sample_seed = 20240901, int sample_pairs = 300);

}  // namespace sylow
