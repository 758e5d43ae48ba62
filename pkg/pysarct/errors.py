# -*- coding: utf-8 -*-
# ***************************************************************************
# *                                                                         *
# * This program is free software: you can redistribute it and/or modify    *
# * it under the terms of the GNU General Public License as published by    *
# * the Free Software Foundation, either version 3 of the License, or       *
# * (at your option) any later version.                                     *
# *                                                                         *
# * This program is distributed in the hope that it will be useful,         *
# * but WITHOUT ANY WARRANTY; without even the implied warranty of          *
# * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the           *
# * GNU General Public License for more details.                            *
# *                                                                         *
# * You should have received a copy of the GNU General Public License       *
# * along with this program.  If not, see <http://www.gnu.org/licenses/>.   *
# *                                                                         *
# ***************************************************************************


class SarctError(Exception):
    """Base class of every error raised by pysarct."""


class _LineError(SarctError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class EmptyInput(SarctError, ValueError):
    pass


class ModelNotFound(SarctError, FileNotFoundError):
    pass


class InvalidTag(SarctError, ValueError):
    pass


class NotAVerb(SarctError, ValueError):
    pass


class ParseError(_LineError):
    pass


class RangeError(_LineError):
    pass


class AnnotationMismatch(_LineError):
    pass


class InvalidAnnotation(SarctError, ValueError):
    pass


class NothingToCombine(SarctError, ValueError):
    pass


class EmptyTrainingSet(SarctError, ValueError):
    pass


class InvalidFoldPlan(SarctError, ValueError):
    pass
