'''
Named placeholder values.

The verdict and slope code needs a handful of values that must never be
confused with a real number or with None: the slope +inf, the stratum
statuses, the job states of the threadpool. Each one is a Sentinel with a
printable name, a chosen truthyness, and a stable serialized form so it can
travel through JSON and CSV output unchanged.

Separate sentinels never == each other, even with the same name. Compare them
with `is`.
'''
class Sentinel:
    def __init__(self, name, truthyness=True, *, serialized=None):
        self.name = name
        self.truthyness = truthyness
        self.serialized = name if serialized is None else serialized

    def __bool__(self):
        return bool(self.truthyness)

    def __repr__(self):
        return f'<Sentinel {repr(self.name)} like {bool(self.truthyness)}>'

    def __str__(self):
        return self.serialized

    def to_json(self):
        return self.serialized
