#pragma once

#include <ostream>

#include "typrank_app/run_record.hpp"

namespace typrank::app {

enum class OutputFormat { Table, Json, Csv };

void render(const RunRecord& record, OutputFormat format, std::ostream& out);
void render_table(const RunRecord& record, std::ostream& out);
void render_csv(const RunRecord& record, std::ostream& out);

/// CSV header line for each command, without the trailing newline.
const char* csv_header(const std::string& command);

} // namespace typrank::app
