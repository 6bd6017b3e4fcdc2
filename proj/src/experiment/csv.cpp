#include "io.hpp"

#include "nlwave/experiment.hpp"

#include <fmt/format.h>

#include <cmath>

namespace nlwave::experiment {

std::string format_number(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    return fmt::format("{:.15e}", value);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
    : path_(path), out_(path) {
    if (!out_)
        throw IoError("cannot write " + path.string());
    for (auto h : header)
        cell(h);
    end_row();
}

void CsvWriter::separator() {
    if (row_started_)
        out_ << ',';
    row_started_ = true;
}

CsvWriter& CsvWriter::cell(double value) {
    separator();
    out_ << format_number(value);
    return *this;
}

CsvWriter& CsvWriter::cell(std::size_t value) {
    separator();
    out_ << value;
    return *this;
}

CsvWriter& CsvWriter::cell(std::complex<double> value) {
    return cell(value.real()).cell(value.imag());
}

CsvWriter& CsvWriter::cell(std::string_view text) {
    separator();
    out_ << text;
    return *this;
}

void CsvWriter::end_row() {
    out_ << '\n';
    row_started_ = false;
    if (!out_)
        throw IoError("write failed for " + path_.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out)
        throw IoError("write failed for " + path.string());
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string() + (ec ? ": " + ec.message() : ""));
}

} // namespace nlwave::experiment
