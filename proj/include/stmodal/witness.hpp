#pragma once

#include "stmodal/minkowski.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stmodal {

/// t with x after t, t after z and t after y1 or y2, for an after-formula premise
/// x after y after y1,y2; x after z; y1 != y2 incomparable. Minkowski spaces only.
/// x == z returns x. Throws PreconditionFailed, or WitnessSearchExhausted if halving runs out.
MinkPoint aaf_witness(const Space& space, const MinkPoint& x, const MinkPoint& y, const MinkPoint& y1,
                      const MinkPoint& y2, const MinkPoint& z);

/// Same conclusion from the weaker premise x after y1,y2,z in 1+1 Minkowski space.
MinkPoint aa2f_witness_2d(const MinkPoint& x, const MinkPoint& y1, const MinkPoint& y2, const MinkPoint& z);

/// f(s) = a s^2 + b s + c is the squared interval from x + s(z-x) to y, on 0 < s <= s_max.
struct SegmentAnalysis {
    Rational a, b, c;
    Rational s_max;
    /// A parameter where the segment point reaches y causally, if one exists.
    std::optional<Rational> s_hit;
};

struct NoWitnessCertificate {
    bool certified = false;
    SegmentAnalysis y1, y2;
};

/// Decides exactly whether some t != x on the null segment [x, z] is causally before y1 or y2.
/// Requires n >= 2, x horismos y1, y2, z strictly, pairwise distinct null rays, and y1, y2, z
/// pairwise spacelike. Throws PreconditionFailed otherwise.
NoWitnessCertificate no_witness_certificate(const MinkPoint& x, const MinkPoint& y1, const MinkPoint& y2,
                                            const MinkPoint& z);

std::string format_certificate(const NoWitnessCertificate& cert);

/// Given x -> y -> y1,y2 and x -> y1,y2 (horismos, equality allowed), whether y1 -> y2 or y2 -> y1.
bool horismos_chain_check(const MinkPoint& x, const MinkPoint& y, const MinkPoint& y1, const MinkPoint& y2);

} // namespace stmodal
