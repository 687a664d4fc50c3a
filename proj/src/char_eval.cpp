#include "sylchar/char_eval.hpp"

namespace sylchar::chars {

CharSpec::CharSpec(std::int64_t p_, std::vector<BitSeq> rows_) : p(p_), rows(std::move(rows_)) {
    exponents.reserve(rows.size());
    for (const auto& row : rows) exponents.emplace_back(row.size(), 1);
    validate();
}

CharSpec::CharSpec(std::int64_t p_, std::vector<BitSeq> rows_,
                   std::vector<std::vector<int>> exponents_)
    : p(p_), rows(std::move(rows_)), exponents(std::move(exponents_)) {
    validate();
}

std::int64_t CharSpec::n() const {
    BigInt degree = BigInt(a()) * pow_int(p, static_cast<std::uint64_t>(k()));
    return degree.convert_to<std::int64_t>();
}

void CharSpec::validate() const {
    require_prime(p);
    if (rows.empty()) throw DomainError("CharSpec: at least one row required");
    if (static_cast<std::int64_t>(rows.size()) > p - 1)
        throw DomainError("CharSpec: row count a must be in [1, p-1]");
    for (const auto& row : rows) {
        if (row.size() != rows.front().size())
            throw DomainError("CharSpec: rows must share a common length");
        for (const auto bit : row)
            if (bit > 1) throw DomainError("CharSpec: row entries must be 0 or 1");
    }
    if (exponents.size() != rows.size())
        throw DomainError("CharSpec: exponent shape mismatch");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (exponents[i].size() != rows[i].size())
            throw DomainError("CharSpec: exponent shape mismatch");
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == 0 && (exponents[i][j] < 1 || exponents[i][j] > p - 1))
                throw DomainError("CharSpec: nontrivial exponents must lie in [1, p-1]");
    }
}

BitSeq parse_bits(const std::string& text) {
    BitSeq bits;
    bits.reserve(text.size());
    for (const char c : text) {
        if (c != '0' && c != '1') throw DomainError("bit string must consist of 0s and 1s");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

namespace {

CycInt eval_bits(std::int64_t p, const BitSeq& u, const std::vector<int>& exps,
                 const sylow::WreathElem& x) {
    const int k = x.level();
    if (k == 0) return CycInt::from_integer(p, 1);

    CycInt value = CycInt::from_integer(p, 1);
    if (x.top() == 0) {
        // Top permutation is trivial: one cycle per coordinate, and the
        // twisted product of a fixed point is the child itself.
        for (const auto& child : x.children()) value = value * eval_bits(p, u, exps, child);
    } else {
        // The top permutation is a p-cycle, so there is a single twisted
        // product spanning all children.
        value = eval_bits(p, u, exps, sylow::twisted_product(x));
    }
    if (u[static_cast<size_t>(k - 1)] == 0) {
        const std::int64_t e = exps[static_cast<size_t>(k - 1)];
        value = value * CycInt::root_of_unity(p, e * x.top());
    }
    return value;
}

}  // namespace

CycInt char_eval_row(std::int64_t p, const BitSeq& u, const std::vector<int>& exponents,
                     const sylow::WreathElem& x) {
    if (x.level() != static_cast<int>(u.size()))
        throw DomainError("char_eval_row: element level does not match the sequence length");
    if (x.level() > 0 && x.prime() != p)
        throw DomainError("char_eval_row: element prime does not match the spec");
    return eval_bits(p, u, exponents, x);
}

CycInt char_eval(const CharSpec& spec, const sylow::WreathElem& x) {
    if (spec.a() != 1) throw DomainError("char_eval: spec must have a single row");
    return char_eval_row(spec.p, spec.rows[0], spec.exponents[0], x);
}

CycInt char_eval_product(const CharSpec& spec, const sylow::ProductElem& x) {
    if (static_cast<int>(x.size()) != spec.a())
        throw DomainError("char_eval_product: factor count does not match the row count");
    CycInt value = CycInt::from_integer(spec.p, 1);
    for (size_t i = 0; i < x.size(); ++i)
        value = value * char_eval_row(spec.p, spec.rows[i], spec.exponents[i], x[i]);
    return value;
}

}  // namespace sylchar::chars
