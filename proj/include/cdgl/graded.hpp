#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgl/rational.hpp"

namespace cdgl {

// Finite-basis Z-graded vector space: ordered basis labels with integer
// degrees.  Immutable after construction; shared by pointer.
class GradedSpace {
 public:
  GradedSpace(std::vector<std::string> labels, std::vector<int> degrees)
      : labels_(std::move(labels)), degrees_(std::move(degrees)) {
    if (labels_.size() != degrees_.size())
      throw std::invalid_argument("GradedSpace: label/degree size mismatch");
    for (int i = 0; i < (int)labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second)
        throw std::invalid_argument("GradedSpace: duplicate label " + labels_[i]);
    }
  }

  int dim() const { return (int)labels_.size(); }
  int degree(int i) const { return degrees_.at(i); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::out_of_range("no basis label " + l);
    return it->second;
  }
  bool has_label(const std::string& l) const { return index_.count(l) > 0; }
  bool same_basis(const GradedSpace& o) const {
    return labels_ == o.labels_ && degrees_ == o.degrees_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_space(std::vector<std::pair<std::string, int>> basis) {
  std::vector<std::string> l;
  std::vector<int> d;
  l.reserve(basis.size());
  for (auto& [lab, deg] : basis) {
    l.push_back(lab);
    d.push_back(deg);
  }
  return std::make_shared<GradedSpace>(std::move(l), std::move(d));
}

// Suspension: shift < 0 tags labels with "s-(...)" and lowers degrees, shift
// > 0 with "s+(...)" and raises them; opposite tags cancel so that shifting
// by -1 and then +1 restores the original space.
inline std::string shift_label(const std::string& l, int dir) {
  const std::string minus = "s-(", plus = "s+(";
  auto wrapped = [&](const std::string& tag) {
    return l.size() > tag.size() + 1 && l.compare(0, tag.size(), tag) == 0 &&
           l.back() == ')';
  };
  if (dir < 0) {
    if (wrapped(plus)) return l.substr(plus.size(), l.size() - plus.size() - 1);
    return minus + l + ")";
  }
  if (wrapped(minus)) return l.substr(minus.size(), l.size() - minus.size() - 1);
  return plus + l + ")";
}

inline SpacePtr suspend(const SpacePtr& v, int shift) {
  if (shift == 0) return v;
  std::vector<std::string> l = v->labels();
  std::vector<int> d = v->degrees();
  int step = shift > 0 ? 1 : -1;
  for (int s = 0; s != shift; s += step)
    for (auto& lab : l) lab = shift_label(lab, step);
  for (auto& deg : d) deg += shift;
  return std::make_shared<GradedSpace>(std::move(l), std::move(d));
}

}  // namespace cdgl
