from daehee_kit.combinat import StirlingCache


class FlippedStirling(StirlingCache):
    """Test double: one signed first-kind entry has the wrong sign."""

    def __init__(self, max_n, flip=(3, 2)):
        super().__init__(max_n)
        self.flip = flip

    def s1(self, n, l):
        value = super().s1(n, l)
        return -value if (n, l) == self.flip else value
