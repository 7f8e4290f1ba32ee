#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "halpart/core.hpp"

namespace halpart::sudoku {

/// A cell (row, column), both 1..9.
struct Cell {
    int row = 1;
    int column = 1;

    [[nodiscard]] int index() const { return (row - 1) * 9 + (column - 1); }
    [[nodiscard]] int block() const { return ((row - 1) / 3) * 3 + (column - 1) / 3 + 1; }
    /// "(r,c)", used as the element label in unit mappings.
    [[nodiscard]] std::string label() const;
    static Cell from_index(int i) { return Cell{i / 9 + 1, i % 9 + 1}; }
    friend bool operator==(Cell, Cell) = default;
};

/// Bit d-1 set means digit d is a candidate.
using DigitSet = std::uint16_t;
inline constexpr DigitSet all_digits = 0x1FF;

enum class UnitKind { Row, Column, Block };

/// One row, column, or block.
struct Unit {
    UnitKind kind = UnitKind::Row;
    int index = 1;
    std::array<Cell, 9> cells{};

    [[nodiscard]] std::string name() const;
};

/// The 27 units: rows 1-9, then columns 1-9, then blocks 1-9.
[[nodiscard]] const std::vector<Unit>& all_units();

/// A 9x9 grid with givens and, for unpopulated cells, candidate digits.
class SudokuGrid {
public:
    SudokuGrid() { candidates_.fill(all_digits); }

    /// 0 when the cell is unpopulated.
    [[nodiscard]] int given(Cell c) const { return givens_[c.index()]; }
    [[nodiscard]] bool is_given(Cell c) const { return givens_[c.index()] != 0; }
    /// Candidates of an unpopulated cell; {g} for a given g.
    [[nodiscard]] DigitSet candidates(Cell c) const;
    [[nodiscard]] bool solved() const;
    [[nodiscard]] int unpopulated_count() const;

    /// Sets a given without touching other cells' candidates.
    void set_given(Cell c, int digit);
    void set_candidates(Cell c, DigitSet digits) { candidates_[c.index()] = digits; }

    friend bool operator==(const SudokuGrid&, const SudokuGrid&) = default;

private:
    std::array<std::uint8_t, 81> givens_{};
    std::array<DigitSet, 81> candidates_{};
};

/// A dead end: a unit whose kernel is empty, or a cell left without candidates.
struct Contradiction {
    std::optional<Unit> unit;
    std::vector<Cell> witness;
    std::string reason;
};

struct Unsolvable {};

/// The peers of c: every other cell in its row, column, or block.
[[nodiscard]] std::vector<Cell> neighborhood(Cell c);

/// Reads 81 significant characters (digits 1-9, '.' or '0' for blanks);
/// whitespace is ignored. Throws ParseError on bad length, bad characters,
/// or a digit repeated within a unit, naming the cell.
[[nodiscard]] SudokuGrid parse_grid(std::string_view text);

/// Resets every unpopulated cell's candidates to the digits not given in
/// its neighborhood. Reports the first cell left without candidates.
[[nodiscard]] std::variant<SudokuGrid, Contradiction> compute_markups(const SudokuGrid& grid);

/// The mapping cell -> candidates over the unpopulated cells of the unit;
/// nullopt when the unit is fully populated.
[[nodiscard]] std::optional<FiniteMapping> unit_mapping(const SudokuGrid& grid, const Unit& unit);

/// One pass over `units`: intersect each unit's candidates with its
/// alldifferent kernel and promote singletons to givens.
[[nodiscard]] std::variant<SudokuGrid, Contradiction> propagate_sweep(const SudokuGrid& grid,
                                                                      std::span<const Unit> units = all_units());

/// Sweeps until nothing changes.
[[nodiscard]] std::variant<SudokuGrid, Contradiction> propagate(const SudokuGrid& grid,
                                                                std::span<const Unit> units = all_units());

/// Propagates, then branches depth-first on the first cell with the fewest
/// candidates, trying digits in increasing order.
[[nodiscard]] std::variant<SudokuGrid, Unsolvable> solve(const SudokuGrid& grid);

/// Every unit holds each digit 1..9 exactly once.
[[nodiscard]] bool is_valid_solution(const SudokuGrid& grid);

/// 81 characters, '.' for unpopulated cells.
[[nodiscard]] std::string to_line(const SudokuGrid& grid);
/// 9x9 rendering with block separators.
[[nodiscard]] std::string to_pretty(const SudokuGrid& grid);

[[nodiscard]] std::vector<int> digits_of(DigitSet d);

} // namespace halpart::sudoku
