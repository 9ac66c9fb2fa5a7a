#include "tabkit/words.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace tabkit {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (std::size_t j = 0; j < letters_.size(); ++j) {
        if (letters_[j] < 1) {
            fail(errc::letter_out_of_range,
                 "letter " + std::to_string(letters_[j]) + " at position " +
                     std::to_string(j + 1) + " must be >= 1");
        }
    }
}

Word Word::reversed() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::appended(int letter) const {
    if (letter < 1) fail(errc::letter_out_of_range, "appended letter must be >= 1");
    Word w = *this;
    w.letters_.push_back(letter);
    return w;
}

namespace {

void trim_fixed_points(std::vector<int>& images) {
    while (!images.empty() &&
           images.back() == static_cast<int>(images.size())) {
        images.pop_back();
    }
}

}  // namespace

Permutation Permutation::one_line(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            fail(errc::not_a_permutation,
                 "one-line sequence is not a permutation of {1.." +
                     std::to_string(n) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    trim_fixed_points(images);
    Permutation w;
    w.images_ = std::move(images);
    return w;
}

Permutation Permutation::simple_transposition(int j) {
    if (j < 1) fail(errc::invalid_argument, "simple transposition index must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(j) + 1);
    std::iota(images.begin(), images.end(), 1);
    std::swap(images[static_cast<std::size_t>(j) - 1], images[static_cast<std::size_t>(j)]);
    Permutation w;
    w.images_ = std::move(images);
    return w;
}

int Permutation::image_of(int i) const {
    if (i < 1) fail(errc::invalid_argument, "permutation applied to nonpositive point");
    if (i > static_cast<int>(images_.size())) return i;
    return images_[static_cast<std::size_t>(i) - 1];
}

int Permutation::coxeter_length() const {
    const auto n = images_.size();
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions;
}

Permutation Permutation::hecke_append(int j) const {
    if (j < 1) fail(errc::letter_out_of_range, "generator index must be >= 1");
    // Ascent at j means w*s_j is longer; otherwise the letter is absorbed.
    if (image_of(j) > image_of(j + 1)) return *this;
    std::vector<int> images = images_;
    if (static_cast<int>(images.size()) < j + 1) {
        const auto old = images.size();
        images.resize(static_cast<std::size_t>(j) + 1);
        std::iota(images.begin() + static_cast<std::ptrdiff_t>(old), images.end(),
                  static_cast<int>(old) + 1);
    }
    std::swap(images[static_cast<std::size_t>(j) - 1], images[static_cast<std::size_t>(j)]);
    trim_fixed_points(images);
    Permutation w;
    w.images_ = std::move(images);
    return w;
}

Permutation hecke_class(const Word& a) {
    Permutation w;
    for (int letter : a) w = w.hecke_append(letter);
    return w;
}

bool is_reduced(const Word& a) {
    return static_cast<int>(a.size()) == hecke_class(a).coxeter_length();
}

bool is_hecke_word(const Word& a, const Permutation& w) {
    return hecke_class(a) == w;
}

CompatiblePair::CompatiblePair(Word a, Word i) : a_(std::move(a)), i_(std::move(i)) {
    if (a_.size() != i_.size()) {
        fail(errc::length_mismatch,
             "a has length " + std::to_string(a_.size()) + ", i has length " +
                 std::to_string(i_.size()));
    }
    for (std::size_t j = 0; j + 1 < i_.size(); ++j) {
        if (i_[j] < i_[j + 1]) {
            fail(errc::not_weakly_decreasing,
                 "i[" + std::to_string(j + 1) + "] < i[" + std::to_string(j + 2) + "]");
        }
        if (i_[j] == i_[j + 1] && a_[j] >= a_[j + 1]) {
            fail(errc::equal_label_not_increasing,
                 "i[" + std::to_string(j + 1) + "] = i[" + std::to_string(j + 2) +
                     "] but a[" + std::to_string(j + 1) + "] >= a[" +
                     std::to_string(j + 2) + "]");
        }
    }
}

CompatiblePair validate_compatible(Word a, Word i) {
    return CompatiblePair(std::move(a), std::move(i));
}

ExponentVector weight(const Word& i, int var_count) {
    if (var_count < 0) fail(errc::invalid_argument, "variable count must be >= 0");
    ExponentVector counts(static_cast<std::size_t>(var_count), 0);
    for (int v : i) {
        if (v > var_count) {
            fail(errc::letter_out_of_range,
                 "label " + std::to_string(v) + " exceeds variable count " +
                     std::to_string(var_count));
        }
        ++counts[static_cast<std::size_t>(v) - 1];
    }
    return counts;
}

}  // namespace tabkit
