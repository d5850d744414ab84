#ifndef LEFSCHETZ_LEFSCHETZ_HPP
#define LEFSCHETZ_LEFSCHETZ_HPP

#include "lefschetz/check_report.hpp"
#include "lefschetz/complexes.hpp"
#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/ihl_report.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/matroids.hpp"
#include "lefschetz/osequence.hpp"
#include "lefschetz/sr_algebra.hpp"

#endif
