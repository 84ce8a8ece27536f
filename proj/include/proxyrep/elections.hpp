#pragma once

#include "proxyrep/geometry.hpp"

#include <vector>

namespace proxyrep {

// Finite multiset of voter positions in [0,1].
class Profile {
 public:
  // Throws std::invalid_argument when empty or a position leaves [0,1].
  explicit Profile(std::vector<Rat> voters);

  const std::vector<Rat>& voters() const { return voters_; }
  std::size_t size() const { return voters_.size(); }

 private:
  std::vector<Rat> voters_;
};

// Tie side for the weak Condorcet winner on profiles with two medians.
enum class MedianSide { Leftmost, Rightmost };

// Winner of the strict-Condorcet (median) rule: the favorite candidate of the
// median voter, with two-median ties resolved by `side`.
std::size_t median_condorcet_winner(const Profile& profile, const Instance& inst, TieBreak tb,
                                    MedianSide side);

// Positions of each voter's nearest proxy, in the profile's order. The result
// is a multiset of proxy positions and may leave [0,1].
std::vector<Rat> proxy_profile(const Profile& profile, const Arrangement& arr, TieBreak tb);

// Winner under proxy voting: the favorite candidate of the median proxy
// position of the delegated profile.
std::size_t proxy_voting_winner(const Profile& profile, const Instance& inst,
                                const Arrangement& arr, TieBreak tb, MedianSide side);

// Distance between the direct winner and the proxy-voting winner under the
// median rule; at most theta whenever the arrangement verifies.
Rat outcome_distance(const Profile& profile, const Instance& inst, const Arrangement& arr,
                     TieBreak tb, MedianSide side);

}  // namespace proxyrep
