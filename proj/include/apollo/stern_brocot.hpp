#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "apollo/rational.hpp"

namespace apollo {

/// Coprime pair [p,q] of nonnegative integers, not [0,0].
class SBPair {
public:
    SBPair(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    Rational ratio() const { return Rational(p_, q_); }
    /// p²/q².
    Rational squared() const;
    std::string to_string() const;

    friend bool operator==(const SBPair&, const SBPair&) = default;
    friend std::ostream& operator<<(std::ostream& os, const SBPair& v) { return os << v.to_string(); }

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// p·n − q·m for [p,m], [q,n].
std::int64_t det(const SBPair& a, const SBPair& b);
bool unimodular(const SBPair& a, const SBPair& b);

/// Rows of the array: row 1 is [1,0],[0,1]; each next row inserts the
/// vector sum between neighbours.
std::vector<std::vector<SBPair>> sb_array(int rows);

/// Componentwise sum, reduced.
SBPair farey_add(const SBPair& a, const SBPair& b);

/// [p,m] ⊞ [q,n] = [p+q, m+n], read as p²/m² ⊞ q²/n² = (p+q)²/(m+n)².
SBPair deformed_add(const SBPair& a, const SBPair& b);
/// Same on raw squared fractions; throws DomainError unless both are
/// squares of rationals.
Rational deformed_add(const Rational& a, const Rational& b);

/// Row in the mediant tree rooted at [1,1] (row 1). Throws DomainError for
/// [1,0] and [0,1], which are not tree nodes.
int sb_row_of(const SBPair& pair);

struct SBNode {
    SBPair pair;
    int row;
    SBPair left;   // smaller-ratio ancestor it is the mediant of
    SBPair right;  // larger-ratio ancestor
};

/// All tree nodes with row ≤ max_row, in increasing order of p/q.
std::vector<SBNode> sb_tree(int max_row);

}  // namespace apollo
