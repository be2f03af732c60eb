export type Reward = 'positive' | 'neutral' | 'negative';

export interface FeatureSpec {
  id: string;
  characteristics: string[];
}

export interface SessionConfig {
  featureSchema: FeatureSpec[];
  actionSet: string[];
  parameters?: Record<string, number>;
  seed?: number;
}

export interface SimilarityEntry {
  a: number;
  b: number;
  sigma: number;
}

export interface PresentResponse {
  categoryId: number;
  isNew: boolean;
  chosenAction: string;
  similaritiesSnapshot: SimilarityEntry[];
}

export interface RewardResponse {
  outcome: string;
  merges: number[][];
  splits: number[][];
  weightsAfter: Record<string, number>;
}

export interface IntervalVectorDoc {
  intervals: [number, number][];
  count: number;
}

export interface CategoryDoc {
  id: number;
  features: Record<string, IntervalVectorDoc[]>;
  experiences: { action: string; reward: Reward }[];
}

export interface GraphDoc {
  version: number;
  parameters: Record<string, number>;
  actionSet: string[];
  featureSchema: { id: string; characteristics: string[] }[];
  weights: { features: Record<string, number>; experience: number };
  categories: CategoryDoc[];
}

export interface EventRecord {
  step: number;
  perceptId: string;
  categoryId: number;
  action: string;
  reward: Reward;
  merges: number[][];
  splits: number[][];
  weightsAfter: Record<string, number>;
}

export interface InspectResponse {
  graph: GraphDoc;
  similarities: SimilarityEntry[];
  weights: Record<string, number>;
  events: EventRecord[];
  pendingInteraction: { categoryId: number; chosenAction: string } | null;
}

export interface ApiError {
  code: string;
  message: string;
}
