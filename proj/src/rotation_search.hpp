#pragma once

// Branch-and-bound over rotation systems of a small graph.
//
// The rotation at vertex v is a cyclic permutation sigma of the darts leaving
// v. Face tracing follows d = (u -> v) to sigma(reverse(d)). The search assigns
// sigma one dart at a time; every assignment extends a face chain, so faces
// close early and the face-count bound prunes long before rotations are
// complete.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace annigraph::detail {

struct SearchBudget {
  std::uint64_t node_limit = 0;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  // Returns false once the budget is spent.
  bool charge(std::uint64_t n);
};

class RotationSearch {
 public:
  // `nbr` holds sorted neighbour lists; `min_face` is a lower bound on the
  // length of any face walk (the girth for graphs of minimum degree 2).
  RotationSearch(const std::vector<std::vector<int>>& nbr, int min_face);

  using Choice = std::pair<int, int>;  // sigma(e) = f

  enum class Outcome { found, refuted, exhausted, cancelled };

  // Depth-first search for a rotation system with at least `target_faces`
  // faces. On `found`, rotation() holds the first one in search order.
  Outcome search(int target_faces, SearchBudget& budget,
                 const std::atomic<long>* cancel_below = nullptr, long task_index = 0);

  // Enumerates the surviving partial assignments at the given depth, in
  // search order. A complete solution above that depth is returned as a
  // prefix shorter than `depth`.
  std::vector<std::vector<Choice>> frontier(int target_faces, int depth);

  void apply(const std::vector<Choice>& prefix);

  // Neighbour order per vertex for the current (complete) assignment.
  std::vector<std::vector<int>> rotation() const;

  int faces_of(const std::vector<std::vector<int>>& rotation) const;
  int dart_count() const { return static_cast<int>(tail_.size()); }

 private:
  struct TrailEntry {
    int* slot;
    int old;
  };

  void set(int& slot, int value) {
    trail_.push_back({&slot, slot});
    slot = value;
  }
  void undo(std::size_t mark);

  void link(int e, int f);
  int face_bound() const { return closed_ + long_chains_ + short_sum_ / min_face_; }
  void add_chain(int len, int sign);
  bool may_link(int e, int f) const;
  // Picks the unassigned dart with the fewest options; -1 when complete.
  int pick() const;

  bool dfs(int target, SearchBudget& budget, const std::atomic<long>* cancel_below,
           long task_index, bool& stopped);
  void collect(int target, int depth, std::vector<Choice>& path,
               std::vector<std::vector<Choice>>& out);

  int min_face_;
  std::vector<int> base_, deg_, tail_, head_, rev_;
  std::vector<int> sigma_, sigma_inv_;
  std::vector<int> rot_end_, rot_len_;    // rotation chains at each vertex
  std::vector<int> face_end_, face_len_;  // face chains
  int closed_ = 0;
  int long_chains_ = 0;
  int short_sum_ = 0;
  int assigned_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::vector<TrailEntry> trail_;
};

}  // namespace annigraph::detail
