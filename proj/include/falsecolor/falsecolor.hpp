#pragma once

#include "falsecolor/color.hpp"
#include "falsecolor/interpolate.hpp"
#include "falsecolor/validate.hpp"
#include "falsecolor/catalog.hpp"
#include "falsecolor/image.hpp"
#include "falsecolor/io.hpp"
