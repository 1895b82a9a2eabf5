from pydantic import BaseModel, Extra


def to_camel_case(snake_case):
    pascal_case = snake_case.title().replace("_", "")
    return pascal_case[0].lower() + pascal_case[1:]


def complex_to_pair(value):
    return [value.real, value.imag]


class CamelBaseModel(BaseModel):
    # This base model automatically adds camelCase aliases, that allow validation against camelCased json.
    # Note: this is intentionally no docstring; the docstring of a config model ends up as its schema description

    class Config:
        alias_generator = to_camel_case
        allow_population_by_field_name = True
        extra = Extra.forbid
        json_encoders = {complex: complex_to_pair}


class FrozenCamelModel(CamelBaseModel):
    # Value objects of the geometry layer: validated once, never mutated afterwards.

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True


class ComplexValue(complex):
    # complex numbers in JSON configs: either a plain number or a pair [re, im]

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema):
        # the pair form, plain numbers are accepted as well
        field_schema.update(type="array", items={"type": "number"}, minItems=2, maxItems=2)

    @classmethod
    def validate(cls, v):
        if isinstance(v, (list, tuple)):
            if len(v) != 2:
                raise ValueError("complex numbers are given as [re, im]")
            v = complex(float(v[0]), float(v[1]))
        try:
            return complex(v)
        except TypeError:
            raise TypeError("complex number required")
