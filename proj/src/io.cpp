#include "dupsys/io.hpp"

#include "dupsys/errors.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dupsys {

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::vector<TrajectoryRow> trajectory_rows(const TrajectoryRecord &record, const std::vector<int> &lengths) {
    const int k = record.index.k();
    std::vector<int> wanted = lengths.empty() ? std::vector<int>{k} : lengths;
    const std::size_t a = record.index.alphabet_size();
    std::vector<TrajectoryRow> rows;
    for (std::size_t r = 0; r < record.steps.size(); ++r) {
        for (int len : wanted) {
            if (len < 1 || len > k) throw InvalidParameter("recorded word length outside [1, k]");
            std::vector<double> x = record.frequencies[r];
            for (int j = k; j > len; --j) {
                std::vector<double> shorter(x.size() / a, 0.0);
                for (std::size_t i = 0; i < x.size(); ++i) shorter[i / a] += x[i];
                x = std::move(shorter);
            }
            KmerIndex index(record.index.alphabet(), len);
            for (std::size_t i = 0; i < x.size(); ++i)
                rows.push_back({record.seed, record.steps[r], record.lengths[r], index.label(i), x[i]});
        }
    }
    return rows;
}

void write_trajectory_csv(std::ostream &out, const std::vector<TrajectoryRow> &rows) {
    out << "seed,step,length,kmer,frequency\n";
    for (const auto &row : rows)
        out << row.seed << ',' << row.step << ',' << row.length << ',' << row.kmer << ',' << format_double(row.frequency)
            << '\n';
}

namespace {

template <typename T> T parse_number(const std::string &field, int line) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw IoError("trajectory CSV line " + std::to_string(line) + ": bad number `" + field + "`");
    return value;
}

} // namespace

std::vector<TrajectoryRow> read_trajectory_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != "seed,step,length,kmer,frequency")
        throw IoError("trajectory CSV has an unexpected header");
    std::vector<TrajectoryRow> rows;
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw IoError("trajectory CSV line " + std::to_string(number) + ": expected 5 fields");
        rows.push_back({parse_number<std::uint64_t>(fields[0], number), parse_number<std::uint64_t>(fields[1], number),
                        parse_number<std::uint64_t>(fields[2], number), fields[3],
                        parse_number<double>(fields[4], number)});
    }
    return rows;
}

void write_text_file(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &size, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 computation failed");
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < size; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

} // namespace dupsys
