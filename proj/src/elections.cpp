#include "proxyrep/elections.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxyrep {

namespace {

// Median position of a multiset; for even sizes the side picks one of the two
// central values.
Rat median_position(std::vector<Rat> values, MedianSide side) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return side == MedianSide::Leftmost ? values[n / 2 - 1] : values[n / 2];
}

}  // namespace

Profile::Profile(std::vector<Rat> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw std::invalid_argument("profile needs at least one voter");
  for (const Rat& v : voters_) {
    if (v < 0 || v > 1) throw std::invalid_argument("voter positions must lie in [0,1]");
  }
}

std::size_t median_condorcet_winner(const Profile& profile, const Instance& inst, TieBreak tb,
                                    MedianSide side) {
  return top_of(median_position(profile.voters(), side), inst, tb);
}

std::vector<Rat> proxy_profile(const Profile& profile, const Arrangement& arr, TieBreak tb) {
  std::vector<Rat> out;
  out.reserve(profile.size());
  for (const Rat& v : profile.voters()) out.push_back(arr.proxy(nearest_proxy(v, arr, tb)));
  return out;
}

std::size_t proxy_voting_winner(const Profile& profile, const Instance& inst,
                                const Arrangement& arr, TieBreak tb, MedianSide side) {
  // The proxy profile keeps multiplicities, so its median is the delegated
  // vote of the median voter.
  return top_of(median_position(proxy_profile(profile, arr, tb), side), inst, tb);
}

Rat outcome_distance(const Profile& profile, const Instance& inst, const Arrangement& arr,
                     TieBreak tb, MedianSide side) {
  const std::size_t direct = median_condorcet_winner(profile, inst, tb, side);
  const std::size_t delegated = proxy_voting_winner(profile, inst, arr, tb, side);
  return rat_abs(inst.candidate(direct) - inst.candidate(delegated));
}

}  // namespace proxyrep
