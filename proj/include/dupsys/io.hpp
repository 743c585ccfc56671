#ifndef DUPSYS_IO_HPP
#define DUPSYS_IO_HPP

#include "dupsys/mutation.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dupsys {

// 17 significant digits: enough to read back the identical double.
std::string format_double(double value);

struct TrajectoryRow {
    std::uint64_t seed = 0;
    std::uint64_t step = 0;
    std::uint64_t length = 0;
    std::string kmer;
    double frequency = 0.0;

    bool operator==(const TrajectoryRow &other) const = default;
};

// Rows for every recorded step and every word of each requested length
// (prefix marginals of the recorded k-mer frequencies). Empty lengths means k.
std::vector<TrajectoryRow> trajectory_rows(const TrajectoryRecord &record, const std::vector<int> &lengths = {});

// Header `seed,step,length,kmer,frequency`.
void write_trajectory_csv(std::ostream &out, const std::vector<TrajectoryRow> &rows);
std::vector<TrajectoryRow> read_trajectory_csv(std::istream &in);

// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path &path, const std::string &content);
std::string read_text_file(const std::filesystem::path &path);

// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string &bytes);

} // namespace dupsys

#endif
