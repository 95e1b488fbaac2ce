#include <pybind11/pybind11.h>
PYBIND11_MODULE(_anyonkit, m) { m.doc() = "anyonkit"; }
