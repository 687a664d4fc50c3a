#pragma once

#include "sylchar/char_spec.hpp"
#include "sylchar/cyc_int.hpp"
#include "sylchar/wreath.hpp"

namespace sylchar::chars {

/// Value at x of the linear character of P_{p^k} described by one row.
/// Computed by the wreath-product recursion: at each level the value is the
/// product over cycles of the top permutation of the child character at the
/// cycle's twisted product, times the level character at the top component.
/// The result is always a p-th root of unity.
CycInt char_eval_row(std::int64_t p, const BitSeq& u, const std::vector<int>& exponents,
                     const sylow::WreathElem& x);

/// char_eval_row for a one-row CharSpec.
CycInt char_eval(const CharSpec& spec, const sylow::WreathElem& x);

/// Product of per-factor values for an element of P_{a p^k} given as one
/// WreathElem per direct factor.
CycInt char_eval_product(const CharSpec& spec, const sylow::ProductElem& x);

}  // namespace sylchar::chars
