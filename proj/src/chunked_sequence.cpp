#include "dupsys/detail/chunked_sequence.hpp"

#include "dupsys/errors.hpp"

namespace dupsys::detail {

ChunkedSequence::ChunkedSequence(const Word &data, std::size_t chunk_capacity)
    : size_(data.size()), capacity_(chunk_capacity < 4 ? 4 : chunk_capacity) {
    const std::size_t fill = capacity_ / 2;
    for (std::size_t i = 0; i < data.size(); i += fill) {
        std::size_t end = i + fill < data.size() ? i + fill : data.size();
        chunks_.emplace_back(data.begin() + static_cast<std::ptrdiff_t>(i),
                             data.begin() + static_cast<std::ptrdiff_t>(end));
    }
    if (chunks_.empty()) chunks_.emplace_back();
    rebuild_tree();
}

void ChunkedSequence::rebuild_tree() {
    tree_.assign(chunks_.size() + 1, 0);
    for (std::size_t i = 0; i < chunks_.size(); ++i) {
        std::size_t j = i + 1;
        tree_[j] += static_cast<std::ptrdiff_t>(chunks_[i].size());
        std::size_t parent = j + (j & (~j + 1));
        if (parent < tree_.size()) tree_[parent] += tree_[j];
    }
    top_bit_ = 1;
    while (top_bit_ * 2 < tree_.size()) top_bit_ *= 2;
}

void ChunkedSequence::tree_add(std::size_t chunk, std::ptrdiff_t delta) {
    for (std::size_t j = chunk + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
}

ChunkedSequence::Location ChunkedSequence::locate(std::size_t position) const {
    // Fenwick descent: largest prefix of chunks whose total size is <= position.
    std::size_t idx = 0;
    auto remaining = static_cast<std::ptrdiff_t>(position);
    for (std::size_t step = top_bit_; step > 0; step /= 2) {
        std::size_t next = idx + step;
        if (next < tree_.size() && tree_[next] <= remaining) {
            idx = next;
            remaining -= tree_[next];
        }
    }
    return {idx, static_cast<std::size_t>(remaining)};
}

Symbol ChunkedSequence::at(std::size_t position) const {
    if (position >= size_) throw InvalidParameter("sequence position out of range");
    Location loc = locate(position);
    return chunks_[loc.chunk][loc.offset];
}

void ChunkedSequence::set(std::size_t position, Symbol value) {
    if (position >= size_) throw InvalidParameter("sequence position out of range");
    Location loc = locate(position);
    chunks_[loc.chunk][loc.offset] = value;
}

void ChunkedSequence::insert(std::size_t gap, const Word &block) {
    if (gap > size_) throw InvalidParameter("insertion gap out of range");
    if (block.empty()) return;
    Location loc;
    if (gap == size_) {
        loc = {chunks_.size() - 1, chunks_.back().size()};
    } else {
        loc = locate(gap);
    }
    Word &chunk = chunks_[loc.chunk];
    chunk.insert(chunk.begin() + static_cast<std::ptrdiff_t>(loc.offset), block.begin(), block.end());
    size_ += block.size();
    if (chunk.size() <= capacity_) {
        tree_add(loc.chunk, static_cast<std::ptrdiff_t>(block.size()));
        return;
    }
    Word upper(chunk.begin() + static_cast<std::ptrdiff_t>(chunk.size() / 2), chunk.end());
    chunk.resize(chunk.size() / 2);
    chunks_.insert(chunks_.begin() + static_cast<std::ptrdiff_t>(loc.chunk + 1), std::move(upper));
    rebuild_tree();
}

Word ChunkedSequence::to_word() const {
    Word out;
    out.reserve(size_);
    for (const auto &chunk : chunks_) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

} // namespace dupsys::detail
