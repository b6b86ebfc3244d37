#pragma once

// Tabular record sink rendered as an aligned table, CSV or a JSON array.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "harmval/cli.hpp"

namespace harmval::cli {

using Cell = std::variant<std::int64_t, std::string, bool>;

class Report {
public:
    explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row);

    std::size_t size() const { return rows_.size(); }

    void write(std::ostream& os, Format format) const;

private:
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write_table(std::ostream& os) const;

    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string cell_text(const Cell& c);

}  // namespace harmval::cli
