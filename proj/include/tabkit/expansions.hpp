#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tabkit/insertion.hpp"
#include "tabkit/tableaux.hpp"
#include "tabkit/words.hpp"

namespace tabkit {

/// Integer polynomial in var_count variables, truncated to total degree at
/// most degree_bound.  Terms over the bound are dropped on insertion; zero
/// coefficients are never stored.  Coefficients are checked 64-bit.
class TruncatedPolynomial {
public:
    TruncatedPolynomial() = default;
    TruncatedPolynomial(int var_count, int degree_bound);

    int var_count() const { return var_count_; }
    int degree_bound() const { return degree_bound_; }
    const std::map<ExponentVector, long long>& terms() const { return terms_; }

    void add_term(const ExponentVector& exponents, long long coeff);
    long long coeff(const ExponentVector& exponents) const;
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const TruncatedPolynomial&) const = default;

private:
    int var_count_ = 0;
    int degree_bound_ = 0;
    std::map<ExponentVector, long long> terms_;
};

/// All Hecke words for w of length at most max_len.  Letters are bounded by
/// the support of w, so the search space is finite.  When TABKIT_CORPUS_DIR
/// is set, results are cached there as JSON-lines keyed by (w, max_len).
std::vector<Word> enumerate_hecke_words(const Permutation& w, int max_len);

void for_each_compatible_pair(const Permutation& w, int max_len, int label_bound,
                              const std::function<void(const CompatiblePair&)>& fn);
std::vector<CompatiblePair> enumerate_compatible_pairs(const Permutation& w, int max_len,
                                                       int label_bound);

/// All decreasing tableaux with entries <= max_entry fitting a box of
/// max_rows x max_cols with at most max_cells cells, the empty one included.
void for_each_decreasing_tableau(int max_entry, int max_rows, int max_cols, int max_cells,
                                 const std::function<void(const DecreasingTableau&)>& fn);

/// Members of Dec_w with at most max_cells cells: decreasing tableaux whose
/// reversed row word is a Hecke word for w.
std::vector<DecreasingTableau> enumerate_dec_tableaux(const Permutation& w, int max_cells);

void for_each_svt(const Partition& shape, int label_bound, int max_weight,
                  const std::function<void(const SetValuedTableau&)>& fn);
void for_each_rsvt(const Partition& shape, int label_bound, int max_weight,
                   const std::function<void(const ReverseSetValuedTableau&)>& fn);
void for_each_ssyt(const Partition& shape, int label_bound,
                   const std::function<void(const SetValuedTableau&)>& fn);

/// Signed generating function of compatible pairs over Hecke words of w,
/// truncated to var_count variables and total degree degree_bound.
TruncatedPolynomial grothendieck_w(const Permutation& w, int var_count, int degree_bound);

/// Shape-indexed (Grassmannian) case, summed over set-valued tableaux.
TruncatedPolynomial grothendieck_shape(const Partition& shape, int var_count,
                                       int degree_bound);

TruncatedPolynomial schur(const Partition& shape, int var_count);

/// Reduced-pair analogue; every monomial has degree exactly l(w).
TruncatedPolynomial stanley_w(const Permutation& w, int var_count);

struct EnumerationCounts {
    long long compatible_pairs = 0;
    long long tableaux = 0;
};

struct ExpansionReport {
    char identity = 'G';
    Permutation w;
    int var_count = 0;
    int degree_bound = 0;
    TruncatedPolynomial lhs;
    TruncatedPolynomial rhs;
    bool equal = false;
    std::map<Partition, long long> shape_multiplicities;  ///< signed counts
    EnumerationCounts counts;
};

/// Checks the expansion of G_w into shape-indexed terms over Dec_w on the
/// common (var_count, degree_bound) truncation.
ExpansionReport verify_expansion_G(const Permutation& w, int var_count, int degree_bound);

/// Checks the Schur expansion of the reduced generating function over the
/// reduced part of Dec_w.
ExpansionReport verify_expansion_F(const Permutation& w, int var_count);

struct BijectionReport {
    Permutation w;
    int max_len = 0;
    int label_bound = 0;
    long long pairs_checked = 0;
    long long fiber_pairs_checked = 0;
    bool injective = true;
    bool weights_preserved = true;
    bool shapes_match = true;
    bool lands_in_dec_w = true;
    bool roundtrip_ok = true;
    bool surjective = true;
    bool dual_ok = true;
    std::string first_failure;

    bool ok() const {
        return injective && weights_preserved && shapes_match && lands_in_dec_w &&
               roundtrip_ok && surjective && dual_ok;
    }
};

/// Exercises the full correspondence over every compatible pair for w with
/// length <= max_len and labels <= label_bound, both flavors, both
/// directions, including surjectivity onto the bounded tableau pairs.
BijectionReport verify_bijection(const Permutation& w, int max_len, int label_bound);

std::vector<Permutation> symmetric_group(int n);

}  // namespace tabkit
