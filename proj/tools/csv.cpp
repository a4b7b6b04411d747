#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include "harness.hpp"

namespace bitrev::bench {
namespace {

void append_double(std::string& line, double value) {
  std::array<char, 64> buf;
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) {
    throw std::runtime_error("failed to format " + std::to_string(value));
  }
  line.append(buf.data(), end);
}

template <class Number>
Number parse_field(std::string_view text, const char* column, std::size_t line_no) {
  Number value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad " + column +
                             " value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void write_csv(const std::vector<BenchmarkRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  std::string line;
  for (const BenchmarkRecord& r : records) {
    line.clear();
    line += r.method;
    line += ',';
    line += std::to_string(r.b);
    line += ',';
    line += std::to_string(std::uint64_t{1} << r.b);
    line += ',';
    line += std::to_string(r.replicate);
    line += ',';
    append_double(line, r.elapsed_s);
    line += ',';
    append_double(line, r.per_element_s);
    line += '\n';
    out << line;
  }
}

void write_csv(const std::vector<BenchmarkRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  write_csv(records, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

std::vector<BenchmarkRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv header mismatch: expected '" + std::string(kCsvHeader) + "'");
  }
  std::vector<BenchmarkRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::array<std::string_view, 6> fields;
    std::string_view rest(line);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const std::size_t comma = rest.find(',');
      if ((comma == std::string_view::npos) != (k + 1 == fields.size())) {
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 6 fields");
      }
      fields[k] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    BenchmarkRecord r;
    r.method = std::string(fields[0]);
    r.b = parse_field<unsigned>(fields[1], "b", line_no);
    const auto n = parse_field<std::uint64_t>(fields[2], "n", line_no);
    if (r.b >= 64 || n != (std::uint64_t{1} << r.b)) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": n is not 2^b");
    }
    r.replicate = parse_field<unsigned>(fields[3], "replicate", line_no);
    r.elapsed_s = parse_field<double>(fields[4], "elapsed_s", line_no);
    r.per_element_s = parse_field<double>(fields[5], "per_element_s", line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<BenchmarkRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return read_csv(in);
}

}  // namespace bitrev::bench
