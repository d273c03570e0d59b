#include "rotation_search.hpp"

#include <algorithm>

namespace annigraph::detail {

bool SearchBudget::charge(std::uint64_t n) {
  if (exhausted.load(std::memory_order_relaxed)) return false;
  const std::uint64_t total = nodes.fetch_add(n, std::memory_order_relaxed) + n;
  if (total > node_limit || std::chrono::steady_clock::now() > deadline) {
    exhausted.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

RotationSearch::RotationSearch(const std::vector<std::vector<int>>& nbr, int min_face)
    : min_face_(std::max(min_face, 2)) {
  const int n = static_cast<int>(nbr.size());
  base_.resize(n + 1);
  deg_.resize(n);
  for (int v = 0; v < n; ++v) {
    deg_[v] = static_cast<int>(nbr[v].size());
    base_[v + 1] = base_[v] + deg_[v];
  }
  const int darts = base_[n];
  tail_.resize(darts);
  head_.resize(darts);
  rev_.resize(darts);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < deg_[v]; ++k) {
      const int d = base_[v] + k, w = nbr[v][k];
      tail_[d] = v;
      head_[d] = w;
      const auto pos = std::lower_bound(nbr[w].begin(), nbr[w].end(), v) - nbr[w].begin();
      rev_[d] = base_[w] + static_cast<int>(pos);
    }
  sigma_.assign(darts, -1);
  sigma_inv_.assign(darts, -1);
  rot_end_.resize(darts);
  face_end_.resize(darts);
  for (int d = 0; d < darts; ++d) rot_end_[d] = face_end_[d] = d;
  rot_len_.assign(darts, 1);
  face_len_.assign(darts, 1);
  short_sum_ = darts;
}

void RotationSearch::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    *trail_.back().slot = trail_.back().old;
    trail_.pop_back();
  }
}

void RotationSearch::add_chain(int len, int sign) {
  if (len >= min_face_)
    set(long_chains_, long_chains_ + sign);
  else
    set(short_sum_, short_sum_ + sign * len);
}

bool RotationSearch::may_link(int e, int f) const {
  if (sigma_inv_[f] != -1) return false;
  // Joining e's rotation chain to its own start closes the cycle, which is
  // only allowed once it covers every dart at the vertex.
  return f != rot_end_[e] || rot_len_[e] == deg_[tail_[e]];
}

void RotationSearch::link(int e, int f) {
  set(sigma_[e], f);
  set(sigma_inv_[f], e);
  set(assigned_, assigned_ + 1);

  const int rs = rot_end_[e], re = rot_end_[f];
  if (f != rs) {
    const int len = rot_len_[e] + rot_len_[f];
    set(rot_end_[rs], re);
    set(rot_end_[re], rs);
    set(rot_len_[rs], len);
    set(rot_len_[re], len);
  }

  // The face walk through rev(e) now continues with f.
  const int a = rev_[e], b = f;
  const int start_a = face_end_[a], end_b = face_end_[b];
  if (b == start_a) {
    add_chain(face_len_[a], -1);
    set(closed_, closed_ + 1);
  } else {
    const int la = face_len_[a], lb = face_len_[b];
    add_chain(la, -1);
    add_chain(lb, -1);
    set(face_end_[start_a], end_b);
    set(face_end_[end_b], start_a);
    set(face_len_[start_a], la + lb);
    set(face_len_[end_b], la + lb);
    add_chain(la + lb, +1);
  }
}

int RotationSearch::pick() const {
  int best = -1, best_options = 0, best_len = 0;
  const int darts = dart_count();
  for (int e = 0; e < darts; ++e) {
    if (sigma_[e] != -1) continue;
    const int v = tail_[e];
    int options = 0;
    for (int f = base_[v]; f < base_[v + 1]; ++f)
      if (may_link(e, f)) ++options;
    const int len = face_len_[rev_[e]];
    if (best < 0 || options < best_options || (options == best_options && len > best_len)) {
      best = e;
      best_options = options;
      best_len = len;
      if (options == 1) break;
    }
  }
  return best;
}

bool RotationSearch::dfs(int target, SearchBudget& budget, const std::atomic<long>* cancel_below,
                         long task_index, bool& stopped) {
  const int e = pick();
  if (e < 0) return closed_ >= target;
  const int v = tail_[e];
  for (int f = base_[v]; f < base_[v + 1]; ++f) {
    if (!may_link(e, f)) continue;
    if ((++local_nodes_ & 1023) == 0) {
      if (!budget.charge(1024) ||
          (cancel_below && cancel_below->load(std::memory_order_relaxed) < task_index)) {
        stopped = true;
        return false;
      }
    }
    const std::size_t mark = trail_.size();
    link(e, f);
    if (face_bound() >= target && dfs(target, budget, cancel_below, task_index, stopped)) return true;
    undo(mark);
    if (stopped) return false;
  }
  return false;
}

RotationSearch::Outcome RotationSearch::search(int target_faces, SearchBudget& budget,
                                               const std::atomic<long>* cancel_below,
                                               long task_index) {
  bool stopped = false;
  local_nodes_ = 0;
  const bool found = face_bound() >= target_faces &&
                     dfs(target_faces, budget, cancel_below, task_index, stopped);
  budget.nodes.fetch_add(local_nodes_ & 1023, std::memory_order_relaxed);
  if (found) return Outcome::found;
  if (!stopped) return Outcome::refuted;
  return budget.exhausted.load() ? Outcome::exhausted : Outcome::cancelled;
}

void RotationSearch::collect(int target, int depth, std::vector<Choice>& path,
                             std::vector<std::vector<Choice>>& out) {
  if (static_cast<int>(path.size()) == depth) {
    out.push_back(path);
    return;
  }
  const int e = pick();
  if (e < 0) {
    if (closed_ >= target) out.push_back(path);
    return;
  }
  const int v = tail_[e];
  for (int f = base_[v]; f < base_[v + 1]; ++f) {
    if (!may_link(e, f)) continue;
    const std::size_t mark = trail_.size();
    link(e, f);
    if (face_bound() >= target) {
      path.emplace_back(e, f);
      collect(target, depth, path, out);
      path.pop_back();
    }
    undo(mark);
  }
}

std::vector<std::vector<RotationSearch::Choice>> RotationSearch::frontier(int target_faces, int depth) {
  std::vector<std::vector<Choice>> out;
  std::vector<Choice> path;
  if (face_bound() >= target_faces) collect(target_faces, depth, path, out);
  return out;
}

void RotationSearch::apply(const std::vector<Choice>& prefix) {
  for (auto [e, f] : prefix) link(e, f);
}

std::vector<std::vector<int>> RotationSearch::rotation() const {
  const int n = static_cast<int>(deg_.size());
  std::vector<std::vector<int>> out(n);
  for (int v = 0; v < n; ++v) {
    if (deg_[v] == 0) continue;
    int d = base_[v];
    for (int k = 0; k < deg_[v]; ++k) {
      out[v].push_back(head_[d]);
      d = sigma_[d];
    }
  }
  return out;
}

int RotationSearch::faces_of(const std::vector<std::vector<int>>& rotation) const {
  const int darts = dart_count();
  auto dart_to = [&](int v, int w) {
    return static_cast<int>(std::lower_bound(head_.begin() + base_[v], head_.begin() + base_[v + 1], w) -
                            head_.begin());
  };
  std::vector<int> sigma(darts);
  for (int v = 0; v < static_cast<int>(deg_.size()); ++v) {
    const auto& order = rotation[v];
    for (int k = 0; k < deg_[v]; ++k) sigma[dart_to(v, order[k])] = dart_to(v, order[(k + 1) % deg_[v]]);
  }
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = d; !seen[x]; x = sigma[rev_[x]]) seen[x] = 1;
  }
  return faces;
}

}  // namespace annigraph::detail
