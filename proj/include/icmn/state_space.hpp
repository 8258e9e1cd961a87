// Enumeration of the epidemic states: every (i, j) with i >= 0, j >= 0,
// 1 <= i+j <= n-1, plus the absorbing Succ state. i counts nodes infected
// for at least two steps, j counts just-infected nodes; the destination is
// never counted. Init is the state (0, 1).
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace icmn {

class EpidemicStateSpace {
  public:
    explicit EpidemicStateSpace(int n);

    int n() const { return n_; }

    // Rows 0..size()-2 are the (i, j) states in lexicographic order;
    // the last row is Succ.
    std::size_t size() const { return states_.size() + 1; }
    std::size_t infection_state_count() const { return states_.size(); }

    const std::vector<std::pair<int, int>>& infection_states() const { return states_; }

    int index_of(int i, int j) const;
    int succ_index() const { return static_cast<int>(states_.size()); }
    int init_index() const { return index_of(0, 1); }

  private:
    int n_;
    std::vector<std::pair<int, int>> states_;
    std::vector<int> row_offset_;  // row_offset_[i] = index of first state with that i
};

}  // namespace icmn
