#include "polaron/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "polaron/error.hpp"

namespace polaron::io {

std::string format_number(double value)
{
    std::ostringstream os;
    os << std::setprecision(12) << value;
    return os.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(out.good(), "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        require(out.good(), "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    require(!ec, "cannot move " + tmp.string() + " into place: " + ec.message());
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

CsvTable parse_csv(std::string_view text)
{
    CsvTable table;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (trim(line).empty()) continue;
        if (!have_header) {
            table.header = split(line);
            have_header = true;
        } else {
            table.rows.push_back(split(line));
        }
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

double parse_double(const std::string& cell, const std::string& where)
{
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    require(!cell.empty() && end == cell.c_str() + cell.size() && errno == 0,
            where + ": not a number: \"" + cell + "\"");
    return v;
}

nlohmann::json rounded(const nlohmann::json& doc)
{
    if (doc.is_number_float()) return std::stod(format_number(doc.get<double>()));
    if (doc.is_array() || doc.is_object()) {
        nlohmann::json out = doc;
        for (auto& item : out) item = rounded(item);
        return out;
    }
    return doc;
}

}  // namespace polaron::io
