#include "cover_search.hpp"

#include <algorithm>

#include "icsie/error.hpp"

namespace icsie::detail {

CoverSearch::CoverSearch(FieldPtr field, std::size_t dim, std::vector<std::uint64_t> constraints,
                         std::size_t threshold, std::uint64_t node_limit)
    : space_(std::move(field), dim),
      constraints_(std::move(constraints)),
      threshold_(threshold),
      node_limit_(node_limit) {
  const Field& f = space_.field();
  std::vector<Elem> p(dim), z(dim);
  std::vector<std::vector<Elem>> unpacked(constraints_.size());
  for (std::size_t k = 0; k < constraints_.size(); ++k) unpacked[k] = space_.unpack(constraints_[k]);
  for (std::uint64_t code = 1; code < space_.size(); ++code) {
    space_.unpack(code, p);
    auto lead = std::find_if(p.begin(), p.end(), [](Elem e) { return e != 0; });
    if (*lead != 1) continue;
    std::vector<std::uint32_t> covered;
    std::vector<bool> mask(constraints_.size(), false);
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
      Elem acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc = f.add(acc, f.mul(unpacked[k][j], p[j]));
      if (acc != 0) {
        covered.push_back(static_cast<std::uint32_t>(k));
        mask[k] = true;
      }
    }
    points_.push_back(code);
    hits_.push_back(std::move(covered));
    hit_mask_.push_back(std::move(mask));
  }
}

void CoverSearch::force(std::vector<std::uint64_t> columns) { forced_ = std::move(columns); }

std::optional<std::vector<std::uint64_t>> CoverSearch::solve(std::size_t length) {
  if (length < forced_.size()) return std::nullopt;
  covered_.assign(constraints_.size(), 0);
  chosen_.clear();
  for (std::uint64_t column : forced_) {
    auto it = std::find(points_.begin(), points_.end(), column);
    if (it == points_.end()) throw Error(ErrorCode::InvalidArgument, "forced column is not a normalized point");
    for (std::uint32_t k : hits_[static_cast<std::size_t>(it - points_.begin())]) ++covered_[k];
    chosen_.push_back(column);
  }
  if (dfs(0, length - forced_.size())) return chosen_;
  return std::nullopt;
}

bool CoverSearch::dfs(std::size_t from_point, std::size_t remaining) {
  if (++nodes_ > node_limit_) {
    throw Error(ErrorCode::BudgetExceeded, "column search exceeded " + std::to_string(node_limit_) + " nodes");
  }
  // The most demanding constraint decides feasibility; when its deficit equals
  // the columns left, every remaining column has to cover it.
  std::size_t worst = 0;
  std::size_t worst_at = constraints_.size();
  for (std::size_t k = 0; k < covered_.size(); ++k) {
    const std::size_t deficit = covered_[k] >= threshold_ ? 0 : threshold_ - covered_[k];
    if (deficit > worst) {
      worst = deficit;
      worst_at = k;
    }
  }
  if (worst == 0) {
    // Pad with copies of the smallest allowed point; any column keeps the
    // condition satisfied.
    for (std::size_t r = 0; r < remaining; ++r) chosen_.push_back(points_[from_point]);
    return true;
  }
  if (worst > remaining) return false;
  for (std::size_t pt = from_point; pt < points_.size(); ++pt) {
    if (worst == remaining && !hit_mask_[pt][worst_at]) continue;
    for (std::uint32_t k : hits_[pt]) ++covered_[k];
    chosen_.push_back(points_[pt]);
    if (dfs(pt, remaining - 1)) return true;
    chosen_.pop_back();
    for (std::uint32_t k : hits_[pt]) --covered_[k];
  }
  return false;
}

}  // namespace icsie::detail
