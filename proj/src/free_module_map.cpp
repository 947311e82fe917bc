#include "extor/free_module_map.hpp"

namespace extor {

FreeModuleMap::FreeModuleMap(RingPtr ring, std::size_t src_rank, std::size_t tgt_rank,
                             std::vector<std::vector<Polynomial>> matrix,
                             std::optional<std::vector<int>> src_shifts,
                             std::optional<std::vector<int>> tgt_shifts)
    : ring_(std::move(ring)), src_rank_(src_rank), tgt_rank_(tgt_rank), mat_(std::move(matrix)),
      src_shifts_(std::move(src_shifts)), tgt_shifts_(std::move(tgt_shifts)) {
    if (mat_.size() != tgt_rank_) throw ArgumentError("matrix row count does not match target rank");
    for (const auto& row : mat_)
        if (row.size() != src_rank_)
            throw ArgumentError("matrix column count does not match source rank");
    if (src_shifts_ && src_shifts_->size() != src_rank_)
        throw ArgumentError("source shift vector has wrong length");
    if (tgt_shifts_ && tgt_shifts_->size() != tgt_rank_)
        throw ArgumentError("target shift vector has wrong length");
}

FreeModuleMap FreeModuleMap::zero(RingPtr ring, std::size_t src_rank, std::size_t tgt_rank) {
    std::vector<std::vector<Polynomial>> m(tgt_rank,
                                           std::vector<Polynomial>(src_rank, Polynomial::zero(ring)));
    return FreeModuleMap(std::move(ring), src_rank, tgt_rank, std::move(m));
}

FreeModuleMap FreeModuleMap::identity(RingPtr ring, std::size_t rank) {
    std::vector<std::vector<Polynomial>> m(rank, std::vector<Polynomial>(rank, Polynomial::zero(ring)));
    for (std::size_t i = 0; i < rank; ++i) m[i][i] = Polynomial::from_long(ring, 1);
    return FreeModuleMap(std::move(ring), rank, rank, std::move(m));
}

FreeModuleMap FreeModuleMap::from_columns(RingPtr ring, std::size_t tgt_rank,
                                          const std::vector<ModuleElement>& cols,
                                          std::optional<std::vector<int>> src_shifts,
                                          std::optional<std::vector<int>> tgt_shifts) {
    std::vector<std::vector<Polynomial>> m(tgt_rank,
                                           std::vector<Polynomial>(cols.size(), Polynomial::zero(ring)));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rank() != tgt_rank) throw ArgumentError("column rank mismatch");
        for (std::size_t i = 0; i < tgt_rank; ++i) m[i][j] = cols[j].coord(i);
    }
    return FreeModuleMap(std::move(ring), cols.size(), tgt_rank, std::move(m),
                         std::move(src_shifts), std::move(tgt_shifts));
}

ModuleElement FreeModuleMap::column(std::size_t j) const {
    std::vector<Polynomial> coords;
    coords.reserve(tgt_rank_);
    for (std::size_t i = 0; i < tgt_rank_; ++i) coords.push_back(mat_[i][j]);
    return ModuleElement(ring_, std::move(coords));
}

std::vector<ModuleElement> FreeModuleMap::columns() const {
    std::vector<ModuleElement> out;
    out.reserve(src_rank_);
    for (std::size_t j = 0; j < src_rank_; ++j) out.push_back(column(j));
    return out;
}

ModuleElement FreeModuleMap::apply(const ModuleElement& v) const {
    if (v.rank() != src_rank_) throw ArgumentError("rank mismatch in map application");
    std::vector<Polynomial> out(tgt_rank_, Polynomial::zero(ring_));
    for (std::size_t j = 0; j < src_rank_; ++j) {
        if (v.coord(j).is_zero()) continue;
        for (std::size_t i = 0; i < tgt_rank_; ++i) {
            if (mat_[i][j].is_zero()) continue;
            out[i] = out[i] + mat_[i][j] * v.coord(j);
        }
    }
    return ModuleElement(ring_, std::move(out));
}

FreeModuleMap FreeModuleMap::compose(const FreeModuleMap& inner) const {
    if (inner.tgt_rank_ != src_rank_) throw ArgumentError("rank mismatch in composition");
    std::vector<std::vector<Polynomial>> m(tgt_rank_,
                                           std::vector<Polynomial>(inner.src_rank_,
                                                                   Polynomial::zero(ring_)));
    for (std::size_t i = 0; i < tgt_rank_; ++i)
        for (std::size_t j = 0; j < inner.src_rank_; ++j)
            for (std::size_t k = 0; k < src_rank_; ++k) {
                if (mat_[i][k].is_zero() || inner.mat_[k][j].is_zero()) continue;
                m[i][j] = m[i][j] + mat_[i][k] * inner.mat_[k][j];
            }
    return FreeModuleMap(ring_, inner.src_rank_, tgt_rank_, std::move(m), inner.src_shifts_,
                         tgt_shifts_);
}

bool FreeModuleMap::is_zero() const {
    for (const auto& row : mat_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool FreeModuleMap::is_graded() const {
    if (!src_shifts_ || !tgt_shifts_) return false;
    for (std::size_t i = 0; i < tgt_rank_; ++i)
        for (std::size_t j = 0; j < src_rank_; ++j) {
            const Polynomial& p = mat_[i][j];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) return false;
            if (p.degree() != (*src_shifts_)[j] - (*tgt_shifts_)[i]) return false;
        }
    return true;
}

}  // namespace extor
