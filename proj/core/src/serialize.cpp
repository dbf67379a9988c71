#include "subcode/serialize.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "subcode/version.hpp"

namespace subcode {

using ordered_json = nlohmann::ordered_json;

std::string code_to_json(const SubspaceCode& code) {
    ordered_json j;
    j["tool"] = "subcode";
    j["version"] = kVersion;
    j["n"] = code.n;
    j["q"] = code.q;
    j["metric"] = metric_name(code.metric);
    j["target_distance"] = code.target_distance;
    j["provenance"] = code.provenance;
    j["cells"] = ordered_json::array();
    for (const auto& cell : code.cells) {
        ordered_json c;
        c["tuple"] = cell.tuple.one_based();
        c["F"] = cell.choice_value;
        c["subspaces"] = ordered_json::array();
        for (const Subspace& s : cell.subspaces) {
            std::vector<unsigned> flat;
            flat.reserve(s.dim() * s.ambient());
            for (std::size_t r = 0; r < s.dim(); ++r)
                for (std::size_t col = 0; col < s.ambient(); ++col)
                    flat.push_back(s.basis().get(r, col));
            c["subspaces"].push_back(flat);
        }
        j["cells"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

SubspaceCode code_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    SubspaceCode code;
    code.n = j.at("n").get<std::size_t>();
    code.q = j.at("q").get<unsigned>();
    const std::string metric = j.at("metric").get<std::string>();
    if (metric == "subspace")
        code.metric = Metric::subspace;
    else if (metric == "injection")
        code.metric = Metric::injection;
    else
        throw ParamError("unknown metric in code dump: " + metric);
    code.target_distance = j.at("target_distance").get<unsigned>();
    if (j.contains("provenance")) code.provenance = j.at("provenance").get<std::string>();

    const GfPtr field = Gf::get(code.q);
    for (const auto& c : j.at("cells")) {
        SubspaceCode::CellBlock block{
            CellTuple::from_one_based(c.at("tuple").get<std::vector<std::size_t>>(), code.n),
            c.at("F").get<long long>(),
            {}};
        for (const auto& flat : c.at("subspaces")) {
            const std::vector<unsigned> entries = flat.get<std::vector<unsigned>>();
            if (code.n == 0 || entries.size() % code.n != 0)
                throw ParamError("subspace entry count is not a multiple of n");
            const std::size_t d = entries.size() / code.n;
            MatrixGf m(field, d, code.n);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t col = 0; col < code.n; ++col)
                    m.set(r, col, field->check(entries[r * code.n + col]));
            block.subspaces.push_back(Subspace::row_space(m));
        }
        code.cells.push_back(std::move(block));
    }
    return code;
}

std::string matrix_code_to_json(const LinearMatrixCode& code) {
    ordered_json j;
    j["q"] = code.field()->q();
    j["rows"] = code.rows();
    j["cols"] = code.cols();
    j["min_rank"] = code.declared_min_rank();
    j["basis"] = ordered_json::array();
    for (const MatrixGf& b : code.basis()) {
        std::vector<unsigned> flat;
        flat.reserve(code.rows() * code.cols());
        for (std::size_t r = 0; r < code.rows(); ++r)
            for (std::size_t c = 0; c < code.cols(); ++c) flat.push_back(b.get(r, c));
        j["basis"].push_back(flat);
    }
    return j.dump(2) + "\n";
}

LinearMatrixCode matrix_code_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    const GfPtr field = Gf::get(j.at("q").get<unsigned>());
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    std::vector<MatrixGf> basis;
    for (const auto& flat : j.at("basis")) {
        const std::vector<unsigned> entries = flat.get<std::vector<unsigned>>();
        if (entries.size() != rows * cols)
            throw ParamError("basis entry count does not match the shape");
        MatrixGf m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, field->check(entries[r * cols + c]));
        basis.push_back(std::move(m));
    }
    return LinearMatrixCode(field, rows, cols, std::move(basis),
                            j.at("min_rank").get<unsigned>());
}

std::string report_to_csv(const SelectionReport& report) {
    std::ostringstream os;
    os << "tuple,length,dimension,F,status,reason\n";
    for (const auto& row : report.rows) {
        os << '"';
        const auto ob = row.tuple.one_based();
        for (std::size_t i = 0; i < ob.size(); ++i) {
            if (i > 0) os << ' ';
            os << ob[i];
        }
        os << '"' << ',' << row.tuple.length() << ',' << cell_dimension(row.tuple) << ','
           << row.choice_value << ',';
        if (row.selected_rank >= 0)
            os << "selected,\"pick " << row.selected_rank << '"';
        else
            os << "discarded,\"" << row.reason << '"';
        os << '\n';
    }
    return os.str();
}

std::string cells_to_csv(std::size_t n) {
    std::ostringstream os;
    os << "tuple,length,dimension,asterisks\n";
    for (const CellTuple& t : enumerate_cells(n)) {
        os << '"';
        const auto ob = t.one_based();
        for (std::size_t i = 0; i < ob.size(); ++i) {
            if (i > 0) os << ' ';
            os << ob[i];
        }
        os << '"' << ',' << t.length() << ',' << cell_dimension(t) << ','
           << asterisk_pattern(t).free_count() << '\n';
    }
    return os.str();
}

std::string cells_to_json(std::size_t n) {
    ordered_json arr = ordered_json::array();
    for (const CellTuple& t : enumerate_cells(n)) {
        ordered_json c;
        c["tuple"] = t.one_based();
        c["length"] = t.length();
        c["dimension"] = cell_dimension(t);
        c["asterisks"] = asterisk_pattern(t).free_count();
        arr.push_back(std::move(c));
    }
    return arr.dump(2) + "\n";
}

MatrixGf matrix_from_csv(const GfPtr& field, const std::string& text) {
    std::vector<std::vector<unsigned>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line, ';')) {
        std::vector<unsigned> row;
        std::stringstream ls(line);
        std::string cellv;
        while (std::getline(ls, cellv, ',')) {
            try {
                std::size_t pos = 0;
                const unsigned long v = std::stoul(cellv, &pos);
                while (pos < cellv.size() && std::isspace((unsigned char)cellv[pos])) ++pos;
                if (pos != cellv.size()) throw ParamError("bad matrix entry: " + cellv);
                row.push_back(unsigned(v));
            } catch (const std::logic_error&) {
                throw ParamError("bad matrix entry: " + cellv);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParamError("empty matrix text");
    return MatrixGf::from_rows(field, rows);
}

}  // namespace subcode
