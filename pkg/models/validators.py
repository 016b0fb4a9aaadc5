"""
Validation helpers shared by parsers and the command-line tool.
"""

import re
from typing import Sequence, Tuple

BRAID_TEXT = re.compile(r'^\s*(\d+)\s*:\s*((?:[-+]?\d+\s*)*)$')


class ValidationUtils:
    """Utility class for common validation functions."""

    @staticmethod
    def validate_braid_text(text: str) -> bool:
        """
        Check the "n: w1 w2 ..." braid format.

        Args:
            text: Braid description

        Returns:
            bool: True if the text has the braid shape

        Example:
            >>> ValidationUtils.validate_braid_text("3: 1 -2 1 -2")
            True
            >>> ValidationUtils.validate_braid_text("1 -2")
            False
        """
        if not text:
            return False
        return bool(BRAID_TEXT.match(text))

    @staticmethod
    def split_braid_text(text: str) -> Tuple[int, Tuple[int, ...]]:
        """
        Split braid text into strand count and letters.

        Raises:
            ValueError: If the text is not in braid format

        Example:
            >>> ValidationUtils.split_braid_text("2: -1")
            (2, (-1,))
        """
        match = BRAID_TEXT.match(text or "")
        if not match:
            raise ValueError(f"malformed braid text {text!r}, expected 'n: w1 w2 ...'")
        strands = int(match.group(1))
        letters = tuple(int(token) for token in match.group(2).split())
        return strands, letters

    @staticmethod
    def validate_resolution_word(word: Sequence[int], length: int) -> bool:
        """
        Check a resolution word has the right length and 0/1 entries.

        Example:
            >>> ValidationUtils.validate_resolution_word((0, 1, 1), 3)
            True
            >>> ValidationUtils.validate_resolution_word((0, 2), 2)
            False
        """
        return len(word) == length and all(value in (0, 1) for value in word)
