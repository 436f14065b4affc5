#pragma once

#include "logmonoid/fan.hpp"
#include "logmonoid/monoid.hpp"

#include <vector>

namespace logmonoid {

/// The ideal generated by finitely many elements of a host monoid: the union
/// of g + host. No generators means the empty ideal.
struct MonoidIdeal {
    AffineMonoid host;
    std::vector<Vector> generators;
};

bool ideal_contains(const MonoidIdeal& j, const Vector& m);

/// Same ideal with a minimal generating set, lex-sorted.
MonoidIdeal reduce_ideal(const MonoidIdeal& j);

/// The maximal ideal P+ generated by the minimal nonunit generators.
MonoidIdeal maximal_ideal(const AffineMonoid& p);

/// True iff some generator s has g - s in the host for every generator g.
/// Throws DomainError(empty_ideal) for the empty ideal.
bool is_invertible(const MonoidIdeal& j);

struct BlowupChart {
    Vector center;      // s
    AffineMonoid fine;  // P[J - s]
    AffineMonoid fs;    // its saturation
};

/// One chart per minimal generator s of J, in lex order of s. P must be toric.
std::vector<BlowupChart> blowup_charts(const MonoidIdeal& j);

struct BlowupFan {
    Fan fan;                                // maximal cones of the subdivision
    std::vector<Vector> centers;            // lex-sorted minimal generators of J
    std::vector<RationalCone> chart_cones;  // sigma ∩ {<n, g - s> >= 0}, per center
};

/// Domains of linearity of n -> min_g <n, g> on sigma, for J an ideal of
/// sigma^dual ∩ Z^n.
BlowupFan blowup_fan(const RationalCone& sigma, const MonoidIdeal& j);

/// Every chart sees a principal pulled-back ideal whose blowup is the chart.
bool idempotence_check(const MonoidIdeal& j);

}  // namespace logmonoid
