#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ihsig/errors.hpp"

namespace ihsig {

using Vertex = std::uint32_t;
using VertexSpan = std::span<const Vertex>;

class Simplex {
 public:
  Simplex() = default;

  explicit Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw NonSimplexFace("a simplex needs at least one vertex");
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (v_[i - 1] >= v_[i])
        throw NonSimplexFace("simplex vertices must be strictly increasing: " +
                             to_string());
  }

  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

  explicit Simplex(VertexSpan vs) : Simplex(std::vector<Vertex>(vs.begin(), vs.end())) {}

  // Sorts and rejects repeated vertices.
  static Simplex from_unsorted(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      std::string s;
      for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
      throw NonSimplexFace("repeated vertex in [" + s + "]");
    }
    return Simplex(std::move(vs));
  }

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  const std::vector<Vertex>& vertices() const { return v_; }
  VertexSpan span() const { return v_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  Simplex face(std::size_t i) const {
    std::vector<Vertex> f;
    f.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
      if (j != i) f.push_back(v_[j]);
    Simplex s;
    s.v_ = std::move(f);
    return s;
  }

  bool contains(Vertex x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i)
      s += (i ? "," : "") + std::to_string(v_[i]);
    return s + "]";
  }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<Vertex> v_;
};

}  // namespace ihsig
