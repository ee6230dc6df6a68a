#pragma once

#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tdopt/linalg.hpp"
#include "tdopt/matrix.hpp"

namespace tdopt {

// Matroid represented by rational vectors, one per element. Elements carry
// stable integer ids that survive contraction, so a recursion can keep talking
// about the same ground set while the representation changes underneath.
//
// rank_of is memoized (LRU, capacity-bounded) behind a mutex; concurrent
// readers are safe, and eviction never changes answers.
class VectorMatroid {
 public:
  VectorMatroid(int ambient, std::vector<Vec> vectors, std::vector<int> ids,
                long long cache_capacity = 1 << 20);

  // Elements are the columns, ids are the column indices.
  static VectorMatroid column_matroid(const RatMatrix& a, long long cache_capacity = 1 << 20);

  int size() const { return static_cast<int>(vectors_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<int>& ids() const { return ids_; }
  const Vec& vector_of(int id) const;

  // Rank of the subset named by ids (duplicates collapse). Unknown ids raise.
  int rank_of(const std::vector<int>& subset_ids) const;
  int rank() const { return rank_of(ids_); }

  Subspace span_of(const std::vector<int>& subset_ids) const;

  // Restriction to subset_ids with every vector replaced by its component in
  // a fixed complement of k; the new rank of X' is dim(X' u k) - dim k.
  VectorMatroid contract_to_quotient(const std::vector<int>& subset_ids,
                                     const Subspace& k) const;

  long long cache_hits() const;
  long long cache_misses() const;

 private:
  std::vector<Vec> gather(const std::vector<int>& subset_ids) const;

  int ambient_;
  std::vector<Vec> vectors_;
  std::vector<int> ids_;
  std::map<int, int> index_of_;
  long long cache_capacity_;

  struct Cache;
  std::shared_ptr<Cache> cache_;  // shared_ptr so the matroid stays copyable
};

}  // namespace tdopt
