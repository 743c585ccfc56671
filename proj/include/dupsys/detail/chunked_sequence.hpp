#ifndef DUPSYS_DETAIL_CHUNKED_SEQUENCE_HPP
#define DUPSYS_DETAIL_CHUNKED_SEQUENCE_HPP

#include "dupsys/alphabet.hpp"

#include <cstddef>
#include <vector>

namespace dupsys::detail {

// Symbol sequence with O(log C + B) positional access and insertion, where C
// is the number of chunks and B the chunk capacity. Chunk sizes are indexed by
// a Fenwick tree that is rebuilt only when a chunk splits.
class ChunkedSequence {
  public:
    explicit ChunkedSequence(const Word &data, std::size_t chunk_capacity = 512);

    std::size_t size() const { return size_; }
    Symbol at(std::size_t position) const;
    void set(std::size_t position, Symbol value);
    // Inserts `block` so that its first symbol lands at index `gap` (0 <= gap <= size).
    void insert(std::size_t gap, const Word &block);

    Word to_word() const;

  private:
    struct Location {
        std::size_t chunk;
        std::size_t offset;
    };

    Location locate(std::size_t position) const;
    void rebuild_tree();
    void tree_add(std::size_t chunk, std::ptrdiff_t delta);

    std::vector<Word> chunks_;
    std::vector<std::ptrdiff_t> tree_;
    std::size_t size_ = 0;
    std::size_t capacity_;
    std::size_t top_bit_ = 1;
};

} // namespace dupsys::detail

#endif
