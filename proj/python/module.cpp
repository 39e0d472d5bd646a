#include <pybind11/pybind11.h>
PYBIND11_MODULE(braidlab, m) { m.doc() = "placeholder"; }
