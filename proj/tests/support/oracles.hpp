#pragma once

#include <cstdint>
#include <vector>

#include "perioknot/gauss.hpp"
#include "perioknot/word.hpp"

namespace testsupport {

// Plain image vectors; composition is "apply left factor first".
using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
Perm eval_word(const std::vector<Perm>& images, const perioknot::Word& w, int degree);

// All of S_d in lexicographic order.
std::vector<Perm> all_perms(int degree);

// Hom(pres, S_d) by plain depth-first assignment. A relator is tested only
// once every generator it mentions has an image, so there is no propagation.
// Results come out in lexicographic order of image tuples.
std::vector<std::vector<Perm>> brute_force_homs(const perioknot::Presentation& pres, int degree);

// |Hom(pres, Z/m)| by enumerating all m^g exponent vectors.
std::uint64_t count_cyclic_homs(const perioknot::Presentation& pres, int m);

// det of the Fox matrix with row `drop_row` and column `drop_col` removed,
// evaluated at the integer t (generators sent to t^{exponent}). Uses
// fraction-free elimination over __int128 on the numeric matrix.
__int128 numeric_fox_minor(const perioknot::Presentation& pres, const std::vector<std::int64_t>& exponents,
                           std::int64_t t, std::size_t drop_row, std::size_t drop_col);

}  // namespace testsupport

namespace testsupport {

// Gauss code of the closure of a braid word: generator k > 0 is σ_k, k < 0
// its inverse. In σ_k the strand entering at position k passes over, and the
// crossing sign is +1. Throws unless the closure is a knot.
perioknot::GaussCode braid_closure(int strands, const std::vector<int>& word);

}  // namespace testsupport
