#include "halpart/sudoku.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "halpart/kernel.hpp"

namespace halpart::sudoku {

namespace {

constexpr DigitSet digit_bit(int d) { return static_cast<DigitSet>(1U << (d - 1)); }

std::vector<Unit> make_units() {
    std::vector<Unit> units;
    for (int r = 1; r <= 9; ++r) {
        Unit u{UnitKind::Row, r, {}};
        for (int c = 1; c <= 9; ++c)
            u.cells[c - 1] = Cell{r, c};
        units.push_back(u);
    }
    for (int c = 1; c <= 9; ++c) {
        Unit u{UnitKind::Column, c, {}};
        for (int r = 1; r <= 9; ++r)
            u.cells[r - 1] = Cell{r, c};
        units.push_back(u);
    }
    for (int b = 1; b <= 9; ++b) {
        Unit u{UnitKind::Block, b, {}};
        const int r0 = ((b - 1) / 3) * 3 + 1;
        const int c0 = ((b - 1) % 3) * 3 + 1;
        for (int i = 0; i < 9; ++i)
            u.cells[i] = Cell{r0 + i / 3, c0 + i % 3};
        units.push_back(u);
    }
    return units;
}

DigitSet markup(const SudokuGrid& g, Cell c) {
    DigitSet out = all_digits;
    for (auto d : neighborhood(c))
        if (g.is_given(d))
            out &= static_cast<DigitSet>(~digit_bit(g.given(d)));
    return out;
}

SudokuGrid with_raw_markups(SudokuGrid g) {
    for (int i = 0; i < 81; ++i) {
        const auto c = Cell::from_index(i);
        if (!g.is_given(c))
            g.set_candidates(c, markup(g, c));
    }
    return g;
}

// Makes c a given and drops the digit from unpopulated peers.
std::optional<Contradiction> assign(SudokuGrid& g, Cell c, int digit) {
    g.set_given(c, digit);
    for (auto peer : neighborhood(c)) {
        if (g.is_given(peer))
            continue;
        const DigitSet left = g.candidates(peer) & static_cast<DigitSet>(~digit_bit(digit));
        g.set_candidates(peer, left);
        if (left == 0)
            return Contradiction{std::nullopt, {peer}, "cell " + peer.label() + " has no candidates left"};
    }
    return std::nullopt;
}

std::vector<Cell> unpopulated_cells(const SudokuGrid& g, const Unit& unit) {
    std::vector<Cell> out;
    for (auto c : unit.cells)
        if (!g.is_given(c))
            out.push_back(c);
    return out;
}

std::optional<SudokuGrid> search(const SudokuGrid& grid) {
    auto propagated = propagate(grid);
    if (std::holds_alternative<Contradiction>(propagated))
        return std::nullopt;
    const auto& g = std::get<SudokuGrid>(propagated);
    if (g.solved())
        return is_valid_solution(g) ? std::optional{g} : std::nullopt;

    std::optional<Cell> branch;
    int fewest = 10;
    for (int i = 0; i < 81; ++i) {
        const auto c = Cell::from_index(i);
        if (g.is_given(c))
            continue;
        const int n = std::popcount(g.candidates(c));
        if (n < fewest) {
            fewest = n;
            branch = c;
        }
    }
    for (int d : digits_of(g.candidates(*branch))) {
        SudokuGrid next = g;
        if (assign(next, *branch, d))
            continue;
        if (auto solution = search(next))
            return solution;
    }
    return std::nullopt;
}

} // namespace

std::string Cell::label() const { return "(" + std::to_string(row) + "," + std::to_string(column) + ")"; }

std::string Unit::name() const {
    switch (kind) {
    case UnitKind::Row:
        return "row " + std::to_string(index);
    case UnitKind::Column:
        return "column " + std::to_string(index);
    case UnitKind::Block:
        return "block " + std::to_string(index);
    }
    return "unit";
}

const std::vector<Unit>& all_units() {
    static const std::vector<Unit> units = make_units();
    return units;
}

DigitSet SudokuGrid::candidates(Cell c) const {
    if (is_given(c))
        return digit_bit(given(c));
    return candidates_[c.index()];
}

bool SudokuGrid::solved() const { return unpopulated_count() == 0; }

int SudokuGrid::unpopulated_count() const {
    int n = 0;
    for (auto g : givens_)
        n += g == 0 ? 1 : 0;
    return n;
}

void SudokuGrid::set_given(Cell c, int digit) {
    givens_[c.index()] = static_cast<std::uint8_t>(digit);
    candidates_[c.index()] = digit == 0 ? all_digits : digit_bit(digit);
}

std::vector<Cell> neighborhood(Cell c) {
    std::vector<Cell> out;
    for (int i = 0; i < 81; ++i) {
        const auto d = Cell::from_index(i);
        if (d == c)
            continue;
        if (d.row == c.row || d.column == c.column || d.block() == c.block())
            out.push_back(d);
    }
    return out;
}

std::vector<int> digits_of(DigitSet d) {
    std::vector<int> out;
    for (int digit = 1; digit <= 9; ++digit)
        if ((d & digit_bit(digit)) != 0)
            out.push_back(digit);
    return out;
}

SudokuGrid parse_grid(std::string_view text) {
    std::string cells;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            cells.push_back(ch);
    if (cells.size() != 81)
        throw ParseError("expected 81 cells, got " + std::to_string(cells.size()));

    SudokuGrid g;
    for (int i = 0; i < 81; ++i) {
        const char ch = cells[static_cast<std::size_t>(i)];
        const auto c = Cell::from_index(i);
        if (ch == '.' || ch == '0')
            continue;
        if (ch < '1' || ch > '9')
            throw ParseError("cell " + c.label() + ": unexpected character '" + std::string(1, ch) + "'");
        g.set_given(c, ch - '0');
    }

    for (const auto& unit : all_units()) {
        std::array<std::optional<Cell>, 10> seen{};
        for (auto c : unit.cells) {
            const int d = g.given(c);
            if (d == 0)
                continue;
            if (seen[d])
                throw ParseError("cell " + c.label() + ": digit " + std::to_string(d) + " repeats " +
                                 seen[d]->label() + " in " + unit.name());
            seen[d] = c;
        }
    }
    return with_raw_markups(g);
}

std::variant<SudokuGrid, Contradiction> compute_markups(const SudokuGrid& grid) {
    SudokuGrid g = with_raw_markups(grid);
    for (int i = 0; i < 81; ++i) {
        const auto c = Cell::from_index(i);
        if (!g.is_given(c) && g.candidates(c) == 0)
            return Contradiction{std::nullopt, {c}, "cell " + c.label() + " has no candidates"};
    }
    return g;
}

std::optional<FiniteMapping> unit_mapping(const SudokuGrid& grid, const Unit& unit) {
    const auto cells = unpopulated_cells(grid, unit);
    if (cells.empty())
        return std::nullopt;
    DigitSet used = 0;
    for (auto c : cells)
        used |= grid.candidates(c);
    const auto digits = digits_of(used);

    std::vector<std::string> xs;
    std::vector<std::string> ys;
    std::vector<YSubset> images;
    for (int d : digits)
        ys.push_back(std::to_string(d));
    for (auto c : cells) {
        xs.push_back(c.label());
        YSubset img;
        for (std::size_t k = 0; k < digits.size(); ++k)
            if ((grid.candidates(c) & digit_bit(digits[k])) != 0)
                img.insert(k);
        images.push_back(img);
    }
    return FiniteMapping(std::move(xs), std::move(ys), std::move(images));
}

std::variant<SudokuGrid, Contradiction> propagate_sweep(const SudokuGrid& grid, std::span<const Unit> units) {
    SudokuGrid g = grid;
    for (const auto& unit : units) {
        const auto mapping = unit_mapping(g, unit);
        if (!mapping)
            continue;
        const auto cells = unpopulated_cells(g, unit);
        const auto kernel = alldifferent_kernel(*mapping);
        if (kernel.empty) {
            std::vector<Cell> witness;
            if (kernel.violation)
                for (auto p : kernel.violation->witness.positions())
                    witness.push_back(cells[p]);
            return Contradiction{unit, witness, "no alldifferent selection in " + unit.name()};
        }
        for (std::size_t x = 0; x < cells.size(); ++x) {
            DigitSet keep = 0;
            for (auto y : kernel.kernel_images[x].positions())
                keep |= digit_bit(std::stoi(mapping->y_labels()[y]));
            g.set_candidates(cells[x], g.candidates(cells[x]) & keep);
        }
        for (auto c : cells) {
            if (g.is_given(c))
                continue;
            const DigitSet left = g.candidates(c);
            if (left == 0)
                return Contradiction{unit, {c}, "cell " + c.label() + " has no candidates left"};
            if (std::popcount(left) == 1)
                if (auto bad = assign(g, c, std::countr_zero(left) + 1))
                    return *bad;
        }
    }
    return g;
}

std::variant<SudokuGrid, Contradiction> propagate(const SudokuGrid& grid, std::span<const Unit> units) {
    SudokuGrid current = grid;
    for (;;) {
        auto next = propagate_sweep(current, units);
        if (std::holds_alternative<Contradiction>(next))
            return next;
        if (std::get<SudokuGrid>(next) == current)
            return next;
        current = std::get<SudokuGrid>(std::move(next));
    }
}

std::variant<SudokuGrid, Unsolvable> solve(const SudokuGrid& grid) {
    if (auto solution = search(grid))
        return *solution;
    return Unsolvable{};
}

bool is_valid_solution(const SudokuGrid& grid) {
    for (const auto& unit : all_units()) {
        DigitSet seen = 0;
        for (auto c : unit.cells) {
            if (!grid.is_given(c))
                return false;
            seen |= digit_bit(grid.given(c));
        }
        if (seen != all_digits)
            return false;
    }
    return true;
}

std::string to_line(const SudokuGrid& grid) {
    std::string out;
    for (int i = 0; i < 81; ++i) {
        const int d = grid.given(Cell::from_index(i));
        out.push_back(d == 0 ? '.' : static_cast<char>('0' + d));
    }
    return out;
}

std::string to_pretty(const SudokuGrid& grid) {
    std::ostringstream out;
    for (int r = 1; r <= 9; ++r) {
        if (r == 4 || r == 7)
            out << "------+-------+------\n";
        for (int c = 1; c <= 9; ++c) {
            if (c == 4 || c == 7)
                out << "| ";
            const int d = grid.given(Cell{r, c});
            out << (d == 0 ? '.' : static_cast<char>('0' + d));
            if (c != 9)
                out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace halpart::sudoku
