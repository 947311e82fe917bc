#pragma once

#include <optional>
#include <vector>

#include "extor/module_element.hpp"

namespace extor {

// Map of finite free modules R^src -> R^tgt given by a tgt x src matrix of
// polynomials.  Optional per-basis degree shifts carry the grading: entry
// (i,j) is homogeneous of degree src_shift[j] - tgt_shift[i] in a graded map.
class FreeModuleMap {
public:
    FreeModuleMap() = default;
    FreeModuleMap(RingPtr ring, std::size_t src_rank, std::size_t tgt_rank,
                  std::vector<std::vector<Polynomial>> matrix,
                  std::optional<std::vector<int>> src_shifts = std::nullopt,
                  std::optional<std::vector<int>> tgt_shifts = std::nullopt);

    static FreeModuleMap zero(RingPtr ring, std::size_t src_rank, std::size_t tgt_rank);
    static FreeModuleMap identity(RingPtr ring, std::size_t rank);
    static FreeModuleMap from_columns(RingPtr ring, std::size_t tgt_rank,
                                      const std::vector<ModuleElement>& cols,
                                      std::optional<std::vector<int>> src_shifts = std::nullopt,
                                      std::optional<std::vector<int>> tgt_shifts = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    std::size_t src_rank() const { return src_rank_; }
    std::size_t tgt_rank() const { return tgt_rank_; }
    const Polynomial& entry(std::size_t row, std::size_t col) const { return mat_[row][col]; }
    const std::optional<std::vector<int>>& src_shifts() const { return src_shifts_; }
    const std::optional<std::vector<int>>& tgt_shifts() const { return tgt_shifts_; }

    ModuleElement column(std::size_t j) const;
    std::vector<ModuleElement> columns() const;
    ModuleElement apply(const ModuleElement& v) const;
    FreeModuleMap compose(const FreeModuleMap& inner) const;  // this ∘ inner
    bool is_zero() const;

    // True when every entry is homogeneous of the degree the shifts dictate.
    bool is_graded() const;

private:
    RingPtr ring_;
    std::size_t src_rank_ = 0, tgt_rank_ = 0;
    std::vector<std::vector<Polynomial>> mat_;  // [row][col]
    std::optional<std::vector<int>> src_shifts_, tgt_shifts_;
};

}  // namespace extor
