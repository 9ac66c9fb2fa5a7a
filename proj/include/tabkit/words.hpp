#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "tabkit/error.hpp"

namespace tabkit {

/// A word over the alphabet of positive integers.  Immutable value type;
/// the empty word is allowed and acts as the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t j) const { return letters_[j]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word reversed() const;
    Word appended(int letter) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// A permutation of Z_{>0} moving finitely many points, stored in one-line
/// notation with trailing fixed points trimmed.  The empty sequence is the
/// identity; equality is sequence equality.
class Permutation {
public:
    Permutation() = default;

    /// Builds from one-line notation; validates that the input is a
    /// permutation of {1..n} and trims trailing fixed points.
    static Permutation one_line(std::vector<int> images);

    static Permutation simple_transposition(int j);

    const std::vector<int>& images() const { return images_; }
    bool is_identity() const { return images_.empty(); }

    /// Image of i (1-based); points beyond the stored window are fixed.
    int image_of(int i) const;

    /// One past the largest moved point (0 for the identity).  Every letter
    /// of a Hecke word for this permutation is < support_bound().
    int support_bound() const { return static_cast<int>(images_.size()); }

    int coxeter_length() const;

    /// Demazure (0-Hecke) product with the simple transposition s_j:
    /// returns w*s_j when that is longer, otherwise w itself.
    Permutation hecke_append(int j) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Left fold of hecke_append over the letters of a.
Permutation hecke_class(const Word& a);

bool is_reduced(const Word& a);
bool is_hecke_word(const Word& a, const Permutation& w);

/// A pair of words (a, i) of equal length n with i weakly decreasing and
/// a strictly increasing on every run of equal i-labels.
class CompatiblePair {
public:
    CompatiblePair() = default;
    CompatiblePair(Word a, Word i);

    const Word& a() const { return a_; }
    const Word& i() const { return i_; }
    std::size_t size() const { return a_.size(); }
    bool empty() const { return a_.empty(); }

    bool operator==(const CompatiblePair&) const = default;
    auto operator<=>(const CompatiblePair&) const = default;

private:
    Word a_;
    Word i_;
};

CompatiblePair validate_compatible(Word a, Word i);

/// Dense exponent vector: one slot per variable x_1..x_k.
using ExponentVector = std::vector<int>;

/// Multiplicity vector of the label word i in var_count slots.
ExponentVector weight(const Word& i, int var_count);

}  // namespace tabkit
