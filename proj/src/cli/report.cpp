#include "report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace harmval::cli {
namespace {

constexpr std::int64_t kJsonSafeInt = std::int64_t{1} << 53;

}  // namespace

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        c);
}

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::logic_error("Report: row width does not match header");
    rows_.push_back(std::move(row));
}

void Report::write(std::ostream& os, Format format) const {
    switch (format) {
        case Format::Csv: write_csv(os); break;
        case Format::Json: write_json(os); break;
        case Format::Table: write_table(os); break;
    }
}

void Report::write_csv(std::ostream& os) const {
    auto line = [&os](const auto& cells, auto text) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << text(cells[i]);
        }
        os << '\n';
    };
    line(columns_, [](const std::string& s) { return s; });
    for (const auto& row : rows_) line(row, cell_text);
}

void Report::write_json(std::ostream& os) const {
    if (rows_.empty()) {
        os << "[]\n";
        return;
    }
    os << "[\n";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    // integers beyond +-2^53 lose precision as JSON numbers
                    if constexpr (std::is_same_v<T, std::int64_t>) {
                        if (v > kJsonSafeInt || v < -kJsonSafeInt) {
                            obj[columns_[i]] = std::to_string(v);
                            return;
                        }
                    }
                    obj[columns_[i]] = v;
                },
                rows_[r][i]);
        }
        os << obj.dump() << (r + 1 < rows_.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

void Report::write_table(std::ostream& os) const {
    std::vector<std::size_t> width(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
    }
    auto line = [&](auto text_at) {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            const std::string t = text_at(i);
            if (i) os << "  ";
            os << std::string(width[i] - t.size(), ' ') << t;
        }
        os << '\n';
    };
    line([&](std::size_t i) { return columns_[i]; });
    for (const auto& row : rows_) line([&](std::size_t i) { return cell_text(row[i]); });
}

}  // namespace harmval::cli
