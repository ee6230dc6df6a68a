#include "tdopt/matroid.hpp"

#include <algorithm>
#include <unordered_map>

#include "tdopt/errors.hpp"

namespace tdopt {

namespace {
struct KeyHash {
  std::size_t operator()(const std::vector<int>& k) const {
    std::size_t h = k.size();
    for (int v : k) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
    return h;
  }
};
}  // namespace

struct VectorMatroid::Cache {
  std::mutex mu;
  std::list<std::pair<std::vector<int>, int>> order;  // front = most recent
  std::unordered_map<std::vector<int>, decltype(order)::iterator, KeyHash> map;
  long long hits = 0;
  long long misses = 0;
};

VectorMatroid::VectorMatroid(int ambient, std::vector<Vec> vectors, std::vector<int> ids,
                             long long cache_capacity)
    : ambient_(ambient),
      vectors_(std::move(vectors)),
      ids_(std::move(ids)),
      cache_capacity_(std::max<long long>(1, cache_capacity)),
      cache_(std::make_shared<Cache>()) {
  if (vectors_.size() != ids_.size()) throw Error("matroid: ids/vectors size mismatch");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (static_cast<int>(vectors_[i].size()) != ambient_)
      throw Error("matroid: vector ambient mismatch");
    if (!index_of_.emplace(ids_[i], static_cast<int>(i)).second)
      throw Error("matroid: duplicate element id");
  }
}

VectorMatroid VectorMatroid::column_matroid(const RatMatrix& a, long long cache_capacity) {
  std::vector<Vec> cols;
  std::vector<int> ids;
  for (int j = 0; j < a.cols(); ++j) {
    cols.push_back(a.col(j));
    ids.push_back(j);
  }
  return VectorMatroid(a.rows(), std::move(cols), std::move(ids), cache_capacity);
}

const Vec& VectorMatroid::vector_of(int id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) throw Error("matroid: unknown element id");
  return vectors_[it->second];
}

std::vector<Vec> VectorMatroid::gather(const std::vector<int>& subset_ids) const {
  std::vector<int> sorted = subset_ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vec> out;
  out.reserve(sorted.size());
  for (int id : sorted) out.push_back(vector_of(id));
  return out;
}

int VectorMatroid::rank_of(const std::vector<int>& subset_ids) const {
  std::vector<int> key = subset_ids;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (int id : key)
    if (!index_of_.count(id)) throw Error("matroid: unknown element id");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(key);
    if (it != cache_->map.end()) {
      ++cache_->hits;
      cache_->order.splice(cache_->order.begin(), cache_->order, it->second);
      return it->second->second;
    }
    ++cache_->misses;
  }
  RatMatrix m(ambient_, static_cast<int>(key.size()));
  for (std::size_t j = 0; j < key.size(); ++j) {
    const Vec& v = vectors_[index_of_.at(key[j])];
    for (int i = 0; i < ambient_; ++i) m.at(i, static_cast<int>(j)) = v[i];
  }
  int r = tdopt::rank(m);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->map.count(key)) {
      cache_->order.emplace_front(key, r);
      cache_->map[key] = cache_->order.begin();
      while (static_cast<long long>(cache_->order.size()) > cache_capacity_) {
        cache_->map.erase(cache_->order.back().first);
        cache_->order.pop_back();
      }
    }
  }
  return r;
}

Subspace VectorMatroid::span_of(const std::vector<int>& subset_ids) const {
  return Subspace::span_of(ambient_, gather(subset_ids));
}

VectorMatroid VectorMatroid::contract_to_quotient(const std::vector<int>& subset_ids,
                                                  const Subspace& k) const {
  if (k.ambient() != ambient_) throw Error("contract: ambient mismatch");
  std::vector<int> sorted = subset_ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vec> vs;
  for (int id : sorted) vs.push_back(vector_of(id));
  QuotientResult q = quotient_by(k, vs);
  return VectorMatroid(ambient_, std::move(q.images), std::move(sorted), cache_capacity_);
}

long long VectorMatroid::cache_hits() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->hits;
}

long long VectorMatroid::cache_misses() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->misses;
}

}  // namespace tdopt
