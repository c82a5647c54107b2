#pragma once
#ifndef FROBENIUS_ALL_HPP
#define FROBENIUS_ALL_HPP

#include <frobenius/arith.hpp>
#include <frobenius/coin.hpp>
#include <frobenius/diophantine.hpp>
#include <frobenius/errors.hpp>
#include <frobenius/geometry.hpp>
#include <frobenius/inductive.hpp>
#include <frobenius/oracle.hpp>
#include <frobenius/report.hpp>

#endif  // FROBENIUS_ALL_HPP
