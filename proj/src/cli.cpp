#include "halpart/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "halpart/kernel.hpp"
#include "halpart/mapping_io.hpp"
#include "halpart/oracle.hpp"
#include "halpart/partition.hpp"
#include "halpart/sudoku.hpp"

namespace halpart::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t nx = 5;
    std::size_t ny = 5;
    double density = 0.4;
    bool compact = false;
};

std::string braces(const std::vector<std::string>& items) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i)
        s += (i ? ", " : "") + items[i];
    return s + "}";
}

std::string joined(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& t : items)
        s += " " + t;
    return s;
}

std::string read_all(const Options& opt, std::istream& in) {
    if (opt.input.empty() || opt.input == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(opt.input);
    if (!file)
        throw ParseError("cannot open '" + opt.input + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

bool as_json(const Options& opt) { return opt.format == "json"; }

int report_violation(const FiniteMapping& f, const HallViolation& v, const Options& opt, std::ostream& out) {
    if (as_json(opt))
        out << json{{"ok", false}, {"witness", f.labels_of(v.witness)}}.dump(2) << '\n';
    else
        out << "violation: " << braces(f.labels_of(v.witness)) << '\n';
    return exit_no_selection;
}

int cmd_check(const FiniteMapping& f, const Options& opt, std::ostream& out) {
    if (auto v = check_hall(f))
        return report_violation(f, *v, opt, out);
    if (as_json(opt))
        out << json{{"ok", true}, {"witness", nullptr}}.dump(2) << '\n';
    else
        out << "OK\n";
    return exit_ok;
}

int cmd_partition(const FiniteMapping& f, const Options& opt, std::ostream& out) {
    auto result = compute_hall_partition(f);
    if (auto* v = std::get_if<HallViolation>(&result))
        return report_violation(f, *v, opt, out);
    const auto& p = std::get<HallPartition>(result);
    if (as_json(opt)) {
        json blocks = json::array();
        json residuals = json::array();
        for (std::size_t i = 0; i < p.size(); ++i) {
            blocks.push_back(f.labels_of(p.blocks[i]));
            residuals.push_back(f.labels_of(p.residual_images[i]));
        }
        out << json{{"blocks", blocks}, {"residuals", residuals}, {"exit_kind", to_string(p.exit_kind)}}.dump(2)
            << '\n';
        return exit_ok;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        out << "block " << i + 1 << ": " << braces(f.labels_of(p.blocks[i])) << " -> "
            << braces(f.labels_of(p.residual_images[i])) << '\n';
    out << "exit: " << to_string(p.exit_kind) << '\n';
    return exit_ok;
}

int cmd_kernel(const FiniteMapping& f, const Options& opt, std::ostream& out) {
    const auto k = alldifferent_kernel(f);
    if (as_json(opt)) {
        json kernel = json::object();
        for (std::size_t x = 0; x < f.x_size(); ++x)
            kernel[f.x_labels()[x]] = f.labels_of(k.kernel_images[x]);
        json witness = k.violation ? json(f.labels_of(k.violation->witness)) : json(nullptr);
        out << json{{"kernel", kernel}, {"empty", k.empty}, {"witness", witness}}.dump(2) << '\n';
    } else {
        for (std::size_t x = 0; x < f.x_size(); ++x)
            out << f.x_labels()[x] << ":" << joined(f.labels_of(k.kernel_images[x])) << '\n';
        if (k.violation)
            out << "violation: " << braces(f.labels_of(k.violation->witness)) << '\n';
    }
    return k.empty ? exit_no_selection : exit_ok;
}

int cmd_select(const FiniteMapping& f, const Options& opt, std::ostream& out) {
    auto result = extract_selection(f);
    if (auto* v = std::get_if<HallViolation>(&result))
        return report_violation(f, *v, opt, out);
    const auto& s = std::get<Selection>(result);
    if (as_json(opt)) {
        json sel = json::object();
        for (std::size_t x = 0; x < f.x_size(); ++x)
            sel[f.x_labels()[x]] = f.y_labels()[s.values[x]];
        out << json{{"selection", sel}}.dump(2) << '\n';
    } else {
        for (std::size_t x = 0; x < f.x_size(); ++x)
            out << f.x_labels()[x] << " -> " << f.y_labels()[s.values[x]] << '\n';
    }
    return exit_ok;
}

int cmd_enumerate(const FiniteMapping& f, const Options& opt, std::ostream& out) {
    const auto all = oracle::enumerate_selections(f);
    if (as_json(opt)) {
        json rows = json::array();
        for (const auto& s : all) {
            json row = json::array();
            for (auto y : s.values)
                row.push_back(f.y_labels()[y]);
            rows.push_back(row);
        }
        out << json{{"x_elements", f.x_labels()}, {"selections", rows}}.dump(2) << '\n';
    } else {
        out << "selections: " << all.size() << '\n';
        for (const auto& s : all) {
            std::vector<std::string> values;
            for (auto y : s.values)
                values.push_back(f.y_labels()[y]);
            out << "(" << joined(values).substr(values.empty() ? 0 : 1) << ")\n";
        }
    }
    return all.empty() ? exit_no_selection : exit_ok;
}

int cmd_random(const Options& opt, std::ostream& out) {
    if (opt.nx == 0 || opt.nx > max_ground_set_size || opt.ny > max_ground_set_size)
        throw SizeLimitError("random mapping sizes must be in 1.." + std::to_string(max_ground_set_size));
    std::mt19937_64 rng(opt.seed);
    std::bernoulli_distribution member(opt.density);
    MappingDocument doc;
    doc.x_elements.emplace();
    doc.y_elements.emplace();
    for (std::size_t y = 1; y <= opt.ny; ++y)
        doc.y_elements->push_back(std::to_string(y));
    for (std::size_t x = 1; x <= opt.nx; ++x) {
        doc.x_elements->push_back(std::to_string(x));
        std::vector<std::string> image;
        for (std::size_t y = 1; y <= opt.ny; ++y)
            if (member(rng))
                image.push_back(std::to_string(y));
        doc.rows.emplace_back(std::to_string(x), image);
    }
    if (as_json(opt)) {
        const auto f = to_mapping(doc);
        json images = json::object();
        for (std::size_t x = 0; x < f.x_size(); ++x)
            images[f.x_labels()[x]] = f.labels_of(f.image(x));
        out << json{{"x_elements", f.x_labels()}, {"y_elements", f.y_labels()}, {"images", images}}.dump(2) << '\n';
    } else {
        out << serialize(doc);
    }
    return exit_ok;
}

std::vector<std::string> grid_texts(const std::string& input) {
    std::vector<std::string> lines;
    std::size_t significant = 0;
    std::istringstream in(input);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string cells;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                cells.push_back(ch);
        if (cells.empty())
            continue;
        significant += cells.size();
        lines.push_back(cells);
    }
    if (significant == 81 && lines.size() > 1) {
        std::string one;
        for (const auto& l : lines)
            one += l;
        return {one};
    }
    if (lines.empty())
        throw ParseError("no grid in input");
    return lines;
}

json candidates_json(const sudoku::SudokuGrid& g) {
    json cands = json::object();
    for (int i = 0; i < 81; ++i) {
        const auto c = sudoku::Cell::from_index(i);
        if (!g.is_given(c))
            cands[c.label()] = sudoku::digits_of(g.candidates(c));
    }
    return cands;
}

int cmd_sudoku(bool solving, const Options& opt, std::istream& in, std::ostream& out) {
    const auto texts = grid_texts(read_all(opt, in));
    std::vector<sudoku::SudokuGrid> grids;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            grids.push_back(sudoku::parse_grid(texts[i]));
        } catch (const ParseError& e) {
            throw ParseError(texts.size() > 1 ? "grid " + std::to_string(i + 1) + ": " + e.what() : e.what());
        }
    }

    int code = exit_ok;
    json results = json::array();
    for (std::size_t i = 0; i < grids.size(); ++i) {
        json entry{{"input", sudoku::to_line(grids[i])}};
        std::string text;
        if (solving) {
            auto r = sudoku::solve(grids[i]);
            if (auto* g = std::get_if<sudoku::SudokuGrid>(&r)) {
                entry["status"] = "solved";
                entry["grid"] = sudoku::to_line(*g);
                text = opt.compact ? sudoku::to_line(*g) + "\n" : sudoku::to_pretty(*g);
            } else {
                code = exit_no_selection;
                entry["status"] = "unsolvable";
                text = "unsolvable\n";
            }
        } else {
            auto r = sudoku::propagate(grids[i]);
            if (auto* g = std::get_if<sudoku::SudokuGrid>(&r)) {
                entry["status"] = g->solved() ? "solved" : "fixpoint";
                entry["grid"] = sudoku::to_line(*g);
                entry["candidates"] = candidates_json(*g);
                text = opt.compact ? sudoku::to_line(*g) + "\n" : sudoku::to_pretty(*g);
            } else {
                const auto& c = std::get<sudoku::Contradiction>(r);
                code = exit_no_selection;
                std::vector<std::string> cells;
                for (auto cell : c.witness)
                    cells.push_back(cell.label());
                entry["status"] = "contradiction";
                entry["unit"] = c.unit ? json(c.unit->name()) : json(nullptr);
                entry["witness"] = cells;
                entry["reason"] = c.reason;
                text = "contradiction: " + c.reason + " " + braces(cells) + "\n";
            }
        }
        results.push_back(entry);
        if (!as_json(opt)) {
            if (i > 0 && !opt.compact)
                out << '\n';
            out << text;
        }
    }
    if (as_json(opt))
        out << results.dump(2) << '\n';
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hall partitions and alldifferent kernels of set-valued mappings", "halpart"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "Input file (default: standard input)");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto* check = app.add_subcommand("check", "Test the Hall condition; print OK or a violating set");
    auto* partition = app.add_subcommand("partition", "Print the Hall partition");
    auto* kernel = app.add_subcommand("kernel", "Print the alldifferent kernel");
    auto* select = app.add_subcommand("select", "Print one alldifferent selection");
    auto* enumerate = app.add_subcommand("enumerate", "Print every alldifferent selection (brute force)");
    auto* random = app.add_subcommand("random", "Print a random mapping document");
    auto* sudoku_cmd = app.add_subcommand("sudoku", "Sudoku propagation and solving");
    sudoku_cmd->require_subcommand(1);
    auto* propagate = sudoku_cmd->add_subcommand("propagate", "Propagate unit kernels to a fixpoint");
    auto* solve = sudoku_cmd->add_subcommand("solve", "Solve by propagation and search");
    for (auto* sub : {check, partition, kernel, select, enumerate, random, propagate, solve})
        add_common(sub);
    for (auto* sub : {propagate, solve})
        sub->add_flag("--compact", opt.compact, "Print 81-character lines instead of a 9x9 grid");
    random->add_option("--seed", opt.seed, "Random seed");
    random->add_option("--nx", opt.nx, "Size of X");
    random->add_option("--ny", opt.ny, "Size of Y");
    random->add_option("--density", opt.density, "Probability of each (x, y) pair")->check(CLI::Range(0.0, 1.0));

    std::vector<const char*> argv{"halpart"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }

    try {
        if (random->parsed())
            return cmd_random(opt, out);
        if (propagate->parsed() || solve->parsed())
            return cmd_sudoku(solve->parsed(), opt, in, out);

        const auto f = to_mapping(parse_mapping_document(read_all(opt, in)));
        if (check->parsed())
            return cmd_check(f, opt, out);
        if (partition->parsed())
            return cmd_partition(f, opt, out);
        if (kernel->parsed())
            return cmd_kernel(f, opt, out);
        if (select->parsed())
            return cmd_select(f, opt, out);
        return cmd_enumerate(f, opt, out);
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_size_limit;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
}

} // namespace halpart::cli
