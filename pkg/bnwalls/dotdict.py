'''
Attribute access for the nested config and for small bundles of display
settings. `DotDict.from_nested` converts a whole tree of dicts so that
`config.verify.strata.k_max` reads naturally, and `to_nested` turns it back
into plain dicts for JSON.

A DotDict also answers the mapping protocol (keys, items, [key]), so
dict(d) gives its plain contents even when a default is set.
'''
from bnwalls import sentinel

NO_DEFAULT = sentinel.Sentinel('NO_DEFAULT')

class DotDict:
    def __init__(self, __dict=None, *, default=NO_DEFAULT, **kwargs):
        self.__default = default
        if __dict:
            self.__dict__.update(__dict)
        self.__dict__.update(**kwargs)

    @classmethod
    def from_nested(cls, data):
        converted = {
            key: (cls.from_nested(value) if isinstance(value, dict) else value)
            for (key, value) in data.items()
        }
        return cls(converted)

    def __contains__(self, key):
        return key in self._to_dict()

    def __delattr__(self, key):
        self.__dict__.pop(key, None)

    def __getattr__(self, key):
        try:
            return self.__dict__[key]
        except KeyError as exc:
            # Dunder lookups from copy, pickle and friends must not get the default.
            default = self.__dict__.get('_DotDict__default', NO_DEFAULT)
            if default is not NO_DEFAULT and not key.startswith('__'):
                return default
            raise AttributeError(key) from exc

    def __getitem__(self, key):
        return self._to_dict()[key]

    def __setattr__(self, key, value):
        self.__dict__[key] = value

    def _to_dict(self):
        display = self.__dict__.copy()
        display.pop('_DotDict__default')
        return display

    def keys(self):
        return self._to_dict().keys()

    def items(self):
        return self._to_dict().items()

    def to_nested(self):
        return {
            key: (value.to_nested() if isinstance(value, DotDict) else value)
            for (key, value) in self.items()
        }

    def __iter__(self):
        return iter(self._to_dict())

    def __repr__(self):
        return f'DotDict({self._to_dict()})'
