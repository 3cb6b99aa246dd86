#include "apollo/stern_brocot.hpp"

#include <numeric>

#include "apollo/errors.hpp"

namespace apollo {

SBPair::SBPair(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw DomainError("SBPair entries must be nonnegative");
    if (p == 0 && q == 0) throw DomainError("SBPair [0,0] is not allowed");
    if (std::gcd(p, q) != 1) throw DomainError("SBPair entries must be coprime: " + to_string());
}

Rational SBPair::squared() const {
    const Rational r = ratio();
    return r * r;
}

std::string SBPair::to_string() const { return "[" + std::to_string(p_) + "," + std::to_string(q_) + "]"; }

std::int64_t det(const SBPair& a, const SBPair& b) { return a.p() * b.q() - b.p() * a.q(); }

bool unimodular(const SBPair& a, const SBPair& b) {
    const auto d = det(a, b);
    return d == 1 || d == -1;
}

std::vector<std::vector<SBPair>> sb_array(int rows) {
    if (rows < 1) throw UsageError("sb_array needs at least one row");
    std::vector<std::vector<SBPair>> out;
    out.push_back({SBPair(1, 0), SBPair(0, 1)});
    for (int r = 1; r < rows; ++r) {
        const auto& prev = out.back();
        std::vector<SBPair> next;
        next.reserve(2 * prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next.push_back(prev[i]);
            next.push_back(farey_add(prev[i], prev[i + 1]));
        }
        next.push_back(prev.back());
        out.push_back(std::move(next));
    }
    return out;
}

SBPair farey_add(const SBPair& a, const SBPair& b) {
    const std::int64_t p = a.p() + b.p();
    const std::int64_t q = a.q() + b.q();
    const std::int64_t g = std::gcd(p, q);
    return SBPair(p / g, q / g);
}

SBPair deformed_add(const SBPair& a, const SBPair& b) { return farey_add(a, b); }

Rational deformed_add(const Rational& a, const Rational& b) {
    const auto ra = exact_sqrt(a);
    const auto rb = exact_sqrt(b);
    if (!ra || !rb) throw DomainError("deformed_add needs squares of rationals");
    const Rational root(mpz_class(ra->numerator() + rb->numerator()), mpz_class(ra->denominator() + rb->denominator()));
    return root * root;
}

int sb_row_of(const SBPair& pair) {
    if (pair.p() == 0 || pair.q() == 0) throw DomainError(pair.to_string() + " is not a Stern-Brocot tree node");
    // lo = [0,1], hi = [1,0]; descend by comparing p/q with the mediant
    std::int64_t lp = 0, lq = 1, hp = 1, hq = 0;
    int row = 1;
    for (;;) {
        const std::int64_t mp = lp + hp, mq = lq + hq;
        if (mp == pair.p() && mq == pair.q()) return row;
        if (pair.p() * mq < mp * pair.q()) {
            hp = mp;
            hq = mq;
        } else {
            lp = mp;
            lq = mq;
        }
        ++row;
    }
}

namespace {

void grow(const SBPair& lo, const SBPair& hi, int row, int max_row, std::vector<SBNode>& out) {
    if (row > max_row) return;
    const SBPair mid = farey_add(lo, hi);
    grow(lo, mid, row + 1, max_row, out);
    out.push_back({mid, row, lo, hi});
    grow(mid, hi, row + 1, max_row, out);
}

}  // namespace

std::vector<SBNode> sb_tree(int max_row) {
    std::vector<SBNode> out;
    grow(SBPair(0, 1), SBPair(1, 0), 1, max_row, out);
    return out;
}

}  // namespace apollo
