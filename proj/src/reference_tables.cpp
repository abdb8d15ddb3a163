#include "fracode/reference_tables.hpp"

#include <limits>
#include <stdexcept>

namespace fracode::reference {
namespace {

constexpr double NR = std::numeric_limits<double>::quiet_NaN(); // not reported

Table make_table1() {
    return {1,
            {1, 4, 6, 8, 10},
            {{0.1,
              {1.0944780, 15.2447755, 32.9377877, 56.8955141, 86.9374806},
              {{"case-I", CellCheck::ErrorRel10, {1.04e-2, 3.62e-2, 5.22e-2, 6.76e-2, 8.26e-2}},
               {"case-II", CellCheck::ErrorRel10, {1.04e-2, 3.62e-2, 5.21e-2, 6.75e-2, 8.26e-2}},
               {"case-III", CellCheck::ErrorRel10, {1.77e-5, 1.98e-5, 2.02e-5, 2.07e-5, 2.10e-5}},
               {"case-IV", CellCheck::ErrorAbsTiny, {0, 0, 2.00e-8, 0, 4.00e-8}}}},
             {0.5,
              {1.5045056, 12.0360444, 22.1116256, 34.0430746, 47.5766431},
              {{"case-I", CellCheck::ErrorRel10, {1.17e-2, 2.30e-2, 2.81e-2, 3.24e-2, 3.61e-2}},
               {"case-II", CellCheck::ErrorRel10, {1.08e-2, 2.21e-2, 2.72e-2, 3.14e-2, 3.52e-2}},
               {"case-III", CellCheck::ErrorRel10, {4.60e-4, 4.64e-4, 4.65e-4, 4.66e-4, 4.66e-4}},
               {"case-IV", CellCheck::ErrorAbsTiny, {0, 0, 0, 2.00e-8, 1.00e-8}}}},
             {0.9,
              {1.9111582, 8.7813771, 13.7171223, 18.8232939, 24.0600562},
              {{"case-I", CellCheck::ErrorRel10, {1.60e-2, 1.76e-2, 1.81e-2, 1.85e-2, 1.88e-2}},
               {"case-II", CellCheck::ErrorRel10, {4.98e-3, 6.54e-3, 7.04e-3, 7.41e-3, 7.70e-3}},
               {"case-III", CellCheck::ErrorRel10, {5.53e-3, 5.53e-3, 5.53e-3, 5.53e-3, 5.53e-3}},
               {"case-IV", CellCheck::ErrorAbsTiny, {0, 0, 0, 1.00e-8, 1.00e-8}}}}}};
}

Table make_table2() {
    return {2,
            {1, 4, 6, 8, 10},
            {{0.1,
              {0.8226218, -0.4960927, -0.2222706, 0.5587627, -0.1911696},
              {{"gear case-II", CellCheck::None, {2.71e-4, 1.39e-2, 4.21e-3, 5.77e-3, 1.39e-2}},
               {"gear case-III", CellCheck::ErrorRel25, {1.40e-5, 1.24e-5, 4.23e-6, 1.47e-5, 7.66e-6}},
               {"gear case-IV", CellCheck::ErrorRel25, {1.06e-5, 1.75e-5, 3.08e-5, 5.57e-6, 3.18e-5}},
               {"adams case-II", CellCheck::None, {8.55e-5, 1.40e-2, 4.27e-3, 5.89e-3, 1.40e-2}},
               {"adams case-III", CellCheck::ErrorRel25, {1.71e-4, 1.05e-4, 5.35e-5, 1.11e-4, 3.97e-5}},
               {"adams case-IV", CellCheck::ErrorRel25, {1.70e-4, 1.14e-4, 3.67e-5, 1.09e-4, 5.85e-5}}}},
             {0.5,
              {0.7374822, 0.3129516, 0.1623955, 0.2017797, 0.1867275},
              {{"gear case-II", CellCheck::None, {7.85e-4, 7.84e-3, 5.76e-3, 4.45e-3, 5.04e-3}},
               {"gear case-III", CellCheck::ErrorRel25, {1.26e-4, 1.02e-4, 1.96e-5, 2.53e-5, 8.40e-6}},
               {"gear case-IV", CellCheck::ErrorRel25, {1.67e-4, 7.25e-5, 4.27e-5, 4.71e-5, 4.29e-5}},
               {"adams case-II", CellCheck::None, {6.92e-5, 7.54e-3, 5.62e-3, 4.27e-3, 4.87e-3}},
               {"adams case-III", CellCheck::ErrorRel25, {5.90e-4, 3.97e-4, 1.22e-4, 1.56e-4, 1.75e-4}},
               {"adams case-IV", CellCheck::ErrorRel25, {5.40e-4, 2.22e-4, 1.06e-4, 1.34e-4, 1.23e-4}}}},
             {0.9,
              {0.6512921, 0.8643086, 0.8128471, 0.7787088, 0.7563200},
              {{"gear case-II", CellCheck::None, {2.29e-3, 4.97e-3, 5.13e-3, 5.09e-3, 5.06e-3}},
               {"gear case-III", CellCheck::ErrorRel25, {1.09e-3, 5.18e-5, 1.20e-4, 7.50e-5, 4.63e-5}},
               {"gear case-IV", CellCheck::ErrorRel25, {1.80e-3, 2.39e-3, 2.25e-3, 2.15e-3, 2.09e-3}},
               {"adams case-II", CellCheck::None, {8.76e-5, 1.78e-3, 2.13e-3, 2.23e-3, 2.28e-3}},
               {"adams case-III", CellCheck::ErrorRel25, {1.25e-3, 3.19e-3, 3.06e-3, 2.89e-3, 2.78e-3}},
               {"adams case-IV", CellCheck::ErrorRel25, {5.65e-4, 7.89e-4, 7.37e-4, 7.02e-4, 6.79e-4}}}}}};
}

Table make_table3() {
    return {3,
            {1, 4, 6, 8, 10},
            {{0.1,
              {-0.1773782, -1.4960927, -1.2222706, -0.4412373, -1.1911696},
              {{"euler", CellCheck::ErrorRel25, {1.79e-5, 2.68e-5, 2.92e-5, 4.23e-6, 3.85e-5}},
               {"gear", CellCheck::ErrorRel25, {1.40e-5, 1.24e-5, 4.18e-6, 1.47e-5, 7.60e-6}},
               {"adams", CellCheck::ErrorRel25OrDoc, {1.70e-4, 1.14e-4, 3.67e-5, 1.09e-4, 5.85e-5}}}},
             {0.5,
              {-0.2625177, -0.6870484, -0.8376044, -0.7982203, -0.8132725},
              {{"euler", CellCheck::ErrorRel25, {1.26e-4, 1.04e-4, 2.41e-5, 2.51e-5, 9.32e-6}},
               {"gear", CellCheck::ErrorRel25, {1.26e-4, 1.02e-4, 1.96e-5, 2.53e-5, 8.40e-6}},
               {"adams", CellCheck::ErrorRel25OrDoc, {5.40e-4, 2.22e-4, 1.06e-4, 1.34e-4, 1.23e-4}}}},
             {0.9,
              {-0.3487079, -0.1356914, -0.1871529, -0.2212912, -0.2436800},
              {{"euler", CellCheck::ErrorRel25, {1.08e-3, 5.29e-5, 1.20e-4, 7.49e-5, 4.62e-5}},
               {"gear", CellCheck::ErrorRel25, {1.06e-3, 5.18e-5, 1.20e-4, 7.50e-5, 4.63e-5}},
               {"adams", CellCheck::ErrorRel25OrDoc, {5.65e-4, 7.89e-4, 7.37e-4, 7.02e-4, 6.79e-4}}}}}};
}

Table make_table4() {
    return {4,
            {1, 4, 6, 8, 10},
            {{0.1,
              {1.3290813, -1.0029826, 0.3872104, 0.4928008, -0.5873420},
              {{"euler", CellCheck::ErrorRel25, {4.83e-3, 3.40e-3, 8.51e-4, 3.06e-3, 1.49e-3}},
               {"gear", CellCheck::ErrorRelDoc, {4.83e-3, 3.41e-3, 8.92e-4, 3.10e-3, 1.49e-3}},
               {"adams", CellCheck::ErrorRelDoc, {1.06e-2, 6.39e-3, 2.50e-3, 7.28e-3, 2.39e-3}}}},
             {0.5,
              {1.1341116, 0.1100800, 0.1748923, 0.2090891, 0.1714270},
              {{"euler", CellCheck::ErrorRel25, {7.42e-3, 8.06e-5, 3.56e-4, 8.41e-4, 6.45e-4}},
               {"gear", CellCheck::ErrorRelDoc, {7.42e-3, 7.54e-5, 3.53e-4, 8.43e-4, 6.45e-4}},
               {"adams", CellCheck::ErrorRelDoc, {2.27e-2, 7.88e-3, 4.71e-3, 6.06e-3, 5.61e-3}}}},
             {0.9,
              {1.0146791, 0.8374876, 0.7913672, 0.7652525, NR},
              {{"euler", CellCheck::ErrorRel25, {5.73e-3, 2.17e-3, 2.01e-3, 1.96e-3, NR}},
               {"gear", CellCheck::ErrorRelDoc, {5.74e-3, 2.17e-3, 2.01e-3, 1.96e-3, NR}},
               {"adams", CellCheck::ErrorRelDoc, {3.15e-2, 3.69e-2, 3.50e-2, 3.37e-2, NR}}}}}};
}

Table make_table5() {
    return {5,
            {1, 2, 3, 4, 5},
            {{0.1,
              {0.3760660, 0.1811155, 0.1014866, 0.0644356, 0.0452231},
              {{"euler", CellCheck::ErrorRel25, {1.36e-3, 9.40e-4, 5.42e-4, 3.03e-4, 1.70e-4}}}},
             {0.5,
              {0.4275836, 0.3362040, 0.2873412, 0.2553957, 0.2323262},
              {{"euler", CellCheck::ErrorRel25, {9.61e-4, 8.60e-4, 7.88e-4, 7.31e-4, 6.85e-4}}}},
             {0.9,
              {0.4855645, 0.4682030, 0.4580801, 0.4509182, 0.4453768},
              {{"euler", CellCheck::ErrorRel25, {1.23e-3, 1.19e-3, 1.17e-3, 1.16e-3, 1.14e-3}}}}}};
}

Table make_table6() {
    return {6,
            {1, 2, 3, 4, 5},
            {{0.1,
              {0.4855645, 0.4682030, 0.4580801, 0.4509182, 0.4453768},
              {{"euler", CellCheck::ErrorRel25, {1.33e-4, 7.06e-5, 4.85e-5, 3.69e-5, 3.07e-5}}}},
             {0.5,
              {0.4275836, 0.3362040, 0.2873412, 0.2553957, 0.2323262},
              {{"euler", CellCheck::ErrorRel25, {8.39e-4, 5.30e-4, 3.73e-4, 2.82e-4, 2.23e-4}}}},
             {0.9,
              {0.3760660, 0.1811155, 0.1014866, 0.0644356, 0.0452231},
              {{"euler", CellCheck::ErrorRel25, {1.55e-3, 1.27e-3, 7.99e-4, 4.77e-4, 2.88e-4}}}}}};
}

} // namespace

const Table& table(int id) {
    static const std::array<Table, 6> tables = {make_table1(), make_table2(), make_table3(),
                                                make_table4(), make_table5(), make_table6()};
    if (id < 1 || id > 6) throw std::out_of_range("reference::table: id must be 1..6");
    return tables[static_cast<std::size_t>(id - 1)];
}

} // namespace fracode::reference
